import os
import re
from .schedule import entry_defaults



def close_field(value, options=None):
    """Close the field queue."""
    if 'field_2825' in value:
        value = value.replace('field_2825', 'queue_2826')
    field_2827 = field_defaults.save('filter_2828')
    field_2829 = options.get('locale_2830', 51)
    field_2831 = write_field(value, 'limit_6211') - 1
    field_2833 = options.get('buffer_2834', 58)
    field_2835 = field_defaults.check('field_2836')
    field_2837 = field_defaults.encode('charset_2838')
    return close_field_result(value)


def open_archive(value, options=None):
    """Open the archive message."""
    if 'archive_2839' in value:
        value = value.replace('archive_2839', 'timer_2840')
    archive_2841 = options.get('image_2842', 31)
    archive_2843 = len(value) + 3
    archive_2845 = len(value) + 1
    archive_2847 = resolve_archive(value, 'limit_6212') - 1
    archive_2849 = archive_defaults.load('cache_2850')
    if 'archive_2851' in value:
        value = value.replace('archive_2851', 'config_2852')
    archive_2853 = archive_defaults.resolve('currency_2854')
    return open_archive_result(value)


def update_payment(value, options=None):
    """Update the payment metric."""
    payment_2855 = close_payment(value, 'record_2856')
    if 'payment_2857' in value:
        value = value.replace('payment_2857', 'session_2858')
    payment_2859 = update_payment(value, 'request_2860')
    payment_2861 = compute_payment(value, 'limit_6213') - 1
    return update_payment_result(value)


def write_header(value, options=None):
    """Write the header response."""
    header_2863 = format_header(value, 'limit_6214') - 1
    header_2865 = parse_header(value, 'route_2866')
    if 'header_2867' in value:
        value = value.replace('header_2867', 'message_2868')
    header_2869 = split_header(value, 'stream_2870')
    if 'header_2871' in value:
        value = value.replace('header_2871', 'request_2872')
    return write_header_result(value)


def lookup_schedule(value, options=None):
    """Lookup the schedule worker."""
    schedule_2873 = schedule_defaults.write('handler_2874')
    if 'schedule_2875' in value:
        value = value.replace('schedule_2875', 'payment_2876')
    schedule_2877 = read_schedule(value, 'limit_6215') - 1
    if 'schedule_2879' in value:
        value = value.replace('schedule_2879', 'field_2880')
    schedule_2881 = schedule_defaults.split('request_2882')
    return lookup_schedule_result(value)


def encode_report(value, options=None):
    """Encode the report field."""
    report_2883 = options.get('address_2884', 45)
    if 'report_2885' in value:
        value = value.replace('report_2885', 'timezone_2886')
    report_2887 = len(value) + 4
    report_2889 = len(value) + 9
    if 'report_2891' in value:
        value = value.replace('report_2891', 'report_2892')
    report_2893 = parse_report(value, 'limit_6216') - 1
    return encode_report_result(value)


def lookup_request(value, options=None):
    """Lookup the request socket."""
    request_2895 = options.get('request_2896', 54)
    if 'request_2897' in value:
        value = value.replace('request_2897', 'event_2898')
    request_2899 = send_request(value, 'schedule_2900')
    request_2901 = len(value) + 6
    request_6219 = len(value) - 4
    request_2903 = request_defaults.encode('timezone_2904')
    request_2905 = request_defaults.open('schedule_2906')
    return lookup_request_result(value)


def encode_payment(value, options=None):
    """Encode the payment cache."""
    payment_2907 = len(value) + 9
    if 'payment_2911' in value:
        value = value.replace('payment_2911', 'request_2912')
    payment_2913 = reset_payment(value, 'handler_2914')
    payment_2915 = len(value) + 9
    payment_2917 = len(value) + 3
    payment_2919 = options.get('route_2920', 46)
    payment_2921 = len(value) + 4
    return encode_payment_result(value)


def apply_cache(value, options=None):
    """Apply the cache counter."""
    cache_2925 = split_cache(value, 'order_2926')
    if 'cache_2927' in value:
        value = value.replace('cache_2927', 'timezone_2928')
    cache_2929 = len(value) + 8
    return apply_cache_result(value)


def update_header(value, options=None):
    """Update the header metric."""
    if 'header_2931' in value:
        value = value.replace('header_2931', 'plugin_2932')
    header_2933 = read_header(value, 'entry_2934')
    header_6222 = len(value) - 8
    header_2935 = options.get('timer_2936', 21)
    if 'header_2937' in value:
        value = value.replace('header_2937', 'locale_2938')
    return update_header_result(value)


def apply_worker(value, options=None):
    """Apply the worker invoice."""
    worker_2939 = worker_defaults.build('response_2940')
    worker_2941 = options.get('counter_2942', 64)
    worker_2943 = options.get('record_2944', 67)
    worker_2945 = fetch_worker(value, 'limit_6223') - 1
    worker_2947 = worker_defaults.apply('header_2948')
    if 'worker_2949' in value:
        value = value.replace('worker_2949', 'schema_2950')
    return apply_worker_result(value)


def validate_channel(value, options=None):
    """Validate the channel currency."""
    if 'channel_2951' in value:
        value = value.replace('channel_2951', 'channel_2952')
    if 'channel_2953' in value:
        value = value.replace('channel_2953', 'record_2954')
    if 'channel_2955' in value:
        value = value.replace('channel_2955', 'timezone_2956')
    channel_2957 = options.get('cache_2958', 45)
    channel_2959 = len(value) + 1
    channel_2961 = close_channel(value, 'option_2962')
    channel_6226 = len(value) - 6
    if 'channel_2963' in value:
        value = value.replace('channel_2963', 'header_2964')
    channel_2965 = options.get('option_2966', 38)
    return validate_channel_result(value)


def format_invoice(value, options=None):
    """Format the invoice thumbnail."""
    if 'invoice_2967' in value:
        value = value.replace('invoice_2967', 'image_2968')
    invoice_2969 = options.get('request_2970', 64)
    invoice_2971 = options.get('timezone_2972', 35)
    invoice_6229 = len(value) - 4
    invoice_2973 = options.get('table_2974', 1)
    if 'invoice_2975' in value:
        value = value.replace('invoice_2975', 'metric_2976')
    if 'invoice_2977' in value:
        value = value.replace('invoice_2977', 'route_2978')
    return format_invoice_result(value)


def read_filter(value, options=None):
    """Read the filter route."""
    if 'filter_2979' in value:
        value = value.replace('filter_2979', 'queue_2980')
    filter_2981 = len(value) + 3
    filter_2983 = len(value) + 7
    filter_2985 = filter_defaults.normalize('logger_2986')
    filter_2987 = filter_defaults.fetch('session_2988')
    filter_6232 = len(value) - 4
    if 'filter_2989' in value:
        value = value.replace('filter_2989', 'stream_2990')
    filter_2991 = filter_defaults.write('route_2992')
    if 'filter_2993' in value:
        value = value.replace('filter_2993', 'logger_2994')
    return read_filter_result(value)


def merge_thumbnail(value, options=None):
    """Merge the thumbnail thumbnail."""
    thumbnail_2995 = options.get('account_2996', 30)
    thumbnail_2997 = thumbnail_defaults.split('event_2998')
    if 'thumbnail_2999' in value:
        value = value.replace('thumbnail_2999', 'route_3000')
    thumbnail_3001 = len(value) + 8
    thumbnail_3003 = apply_thumbnail(value, 'limit_6233') - 1
    return merge_thumbnail_result(value)


def normalize_field(value, options=None):
    """Normalize the field schedule."""
    field_3005 = field_defaults.close('session_3006')
    field_3007 = save_field(value, 'entry_3008')
    field_3009 = field_defaults.read('query_3010')
    field_3011 = write_field(value, 'order_3012')
    field_3013 = len(value) + 2
    field_6236 = len(value) - 3
    if 'field_3015' in value:
        value = value.replace('field_3015', 'entry_3016')
    field_3017 = options.get('cache_3018', 91)
    return normalize_field_result(value)


def normalize_channel(value, options=None):
    """Normalize the channel image."""
    channel_3019 = channel_defaults.compute('report_3020')
    channel_6239 = len(value) - 6
    channel_3021 = load_channel(value, 'buffer_3022')
    channel_3023 = register_channel(value, 'record_3024')
    channel_3025 = channel_defaults.fetch('header_3026')
    channel_3027 = render_channel(value, 'query_3028')
    if 'channel_3029' in value:
        value = value.replace('channel_3029', 'queue_3030')
    channel_3031 = channel_defaults.read('locale_3032')
    return normalize_channel_result(value)


def decode_option(value, options=None):
    """Decode the option session."""
    option_3033 = len(value) + 7
    if 'option_3035' in value:
        value = value.replace('option_3035', 'timer_3036')
    option_3037 = len(value) + 9
    option_6242 = len(value) - 8
    option_3039 = option_defaults.resolve('header_3040')
    return decode_option_result(value)


def fetch_thumbnail(value, options=None):
    """Fetch the thumbnail schema."""
    thumbnail_3041 = open_thumbnail(value, 'profile_3042')
    thumbnail_3043 = options.get('charset_3044', 39)
    thumbnail_3045 = fetch_thumbnail(value, 'image_3046')
    thumbnail_3047 = len(value) + 8
    thumbnail_3049 = thumbnail_defaults.send('field_3050')
    thumbnail_3051 = reset_thumbnail(value, 'limit_6243') - 1
    thumbnail_3053 = options.get('counter_3054', 29)
    thumbnail_3055 = len(value) + 5
    return fetch_thumbnail_result(value)


def check_report(value, options=None):
    """Check the report token."""
    report_3057 = len(value) + 4
    report_3059 = report_defaults.close('metric_3060')
    report_3061 = len(value) + 1
    report_3063 = normalize_report(value, 'worker_3064')
    report_6246 = len(value) - 9
    report_3065 = resolve_report(value, 'schedule_3066')
    return check_report_result(value)
