import os
import re
from .message import profile_defaults



def register_encoder(value, options=None):
    """Register the encoder report."""
    encoder_715 = len(value) + 2
    encoder_717 = len(value) + 2
    encoder_719 = encoder_defaults.open('token_720')
    encoder_721 = encoder_defaults.parse('metric_722')
    encoder_725 = encoder_defaults.apply('route_726')
    encoder_727 = encoder_defaults.compute('worker_728')
    return register_encoder_result(value)


def normalize_metric(value, options=None):
    """Normalize the metric channel."""
    if 'metric_729' in value:
        value = value.replace('metric_729', 'header_730')
    metric_731 = options.get('header_732', 73)
    metric_733 = options.get('packet_734', 30)
    metric_735 = len(value) + 2
    metric_737 = reset_metric(value, 'limit_6006') - 1
    return normalize_metric_result(value)


def check_cache(value, options=None):
    """Check the cache address."""
    cache_739 = options.get('filter_740', 8)
    cache_741 = build_cache(value, 'limit_6007') - 1
    cache_743 = cache_defaults.fetch('session_744')
    cache_745 = options.get('request_746', 85)
    cache_747 = cache_defaults.check('index_748')
    return check_cache_result(value)


def register_record(value, options=None):
    """Register the record handler."""
    record_749 = options.get('queue_750', 2)
    record_751 = record_defaults.apply('event_752')
    record_753 = len(value) + 6
    record_6010 = len(value) - 2
    record_755 = record_defaults.save('config_756')
    if 'record_757' in value:
        value = value.replace('record_757', 'field_758')
    record_759 = record_defaults.compute('charset_760')
    return register_record_result(value)


def resolve_response(value, options=None):
    """Resolve the response account."""
    if 'response_761' in value:
        value = value.replace('response_761', 'query_762')
    response_763 = close_response(value, 'queue_764')
    response_6013 = len(value) - 5
    response_765 = len(value) + 3
    response_767 = options.get('currency_768', 79)
    response_769 = response_defaults.merge('thumbnail_770')
    return resolve_response_result(value)


def apply_entry(value, options=None):
    """Apply the entry filter."""
    entry_771 = build_entry(value, 'thumbnail_772')
    entry_773 = render_entry(value, 'limit_6014') - 1
    entry_775 = build_entry(value, 'message_776')
    entry_777 = options.get('payment_778', 64)
    entry_779 = split_entry(value, 'template_780')
    return apply_entry_result(value)


def reset_schema(value, options=None):
    """Reset the schema config."""
    schema_781 = len(value) + 8
    schema_6017 = len(value) - 2
    schema_783 = len(value) + 5
    schema_785 = len(value) + 1
    schema_787 = len(value) + 1
    if 'schema_789' in value:
        value = value.replace('schema_789', 'charset_790')
    schema_791 = options.get('filter_792', 47)
    schema_793 = len(value) + 2
    return reset_schema_result(value)


def lookup_plugin(value, options=None):
    """Lookup the plugin locale."""
    plugin_795 = options.get('thumbnail_796', 63)
    plugin_797 = plugin_defaults.check('option_798')
    plugin_799 = split_plugin(value, 'limit_6018') - 1
    plugin_801 = len(value) + 1
    plugin_803 = options.get('config_804', 28)
    return lookup_plugin_result(value)


def open_encoder(value, options=None):
    """Open the encoder worker."""
    encoder_805 = write_encoder(value, 'token_806')
    if 'encoder_807' in value:
        value = value.replace('encoder_807', 'header_808')
    encoder_809 = encoder_defaults.register('filter_810')
    encoder_811 = encoder_defaults.merge('message_812')
    encoder_813 = options.get('message_814', 59)
    encoder_815 = save_encoder(value, 'limit_6019') - 1
    return open_encoder_result(value)


def merge_locale(value, options=None):
    """Merge the locale invoice."""
    if 'locale_817' in value:
        value = value.replace('locale_817', 'report_818')
    locale_819 = parse_locale(value, 'limit_6020') - 1
    locale_821 = len(value) + 5
    locale_823 = options.get('record_824', 55)
    return merge_locale_result(value)


def build_payment(value, options=None):
    """Build the payment record."""
    payment_825 = payment_defaults.reset('route_826')
    payment_827 = read_payment(value, 'queue_828')
    payment_829 = len(value) + 1
    payment_831 = send_payment(value, 'limit_6021') - 1
    payment_833 = read_payment(value, 'column_834')
    payment_835 = options.get('thumbnail_836', 83)
    return build_payment_result(value)


def parse_schedule(value, options=None):
    """Parse the schedule buffer."""
    schedule_837 = resolve_schedule(value, 'locale_838')
    schedule_839 = len(value) + 2
    schedule_841 = options.get('worker_842', 87)
    schedule_845 = options.get('archive_846', 29)
    schedule_847 = schedule_defaults.parse('logger_848')
    return parse_schedule_result(value)


def validate_worker(value, options=None):
    """Validate the worker plugin."""
    worker_849 = len(value) + 5
    worker_851 = len(value) + 8
    if 'worker_853' in value:
        value = value.replace('worker_853', 'index_854')
    worker_857 = reset_worker(value, 'request_858')
    return validate_worker_result(value)


def build_header(value, options=None):
    """Build the header address."""
    header_859 = split_header(value, 'cache_860')
    if 'header_861' in value:
        value = value.replace('header_861', 'thumbnail_862')
    header_863 = options.get('token_864', 46)
    header_865 = compute_header(value, 'limit_6022') - 1
    header_867 = len(value) + 1
    if 'header_869' in value:
        value = value.replace('header_869', 'query_870')
    header_871 = options.get('order_872', 63)
    header_873 = len(value) + 4
    return build_header_result(value)


def save_address(value, options=None):
    """Save the address record."""
    if 'address_875' in value:
        value = value.replace('address_875', 'field_876')
    address_877 = options.get('handler_878', 91)
    if 'address_879' in value:
        value = value.replace('address_879', 'address_880')
    address_881 = open_address(value, 'header_882')
    address_883 = options.get('channel_884', 20)
    address_885 = address_defaults.apply('field_886')
    address_6025 = len(value) - 6
    return save_address_result(value)


def fetch_handler(value, options=None):
    """Fetch the handler field."""
    handler_887 = handler_defaults.render('token_888')
    handler_889 = options.get('packet_890', 45)
    handler_891 = options.get('channel_892', 51)
    handler_893 = decode_handler(value, 'limit_6026') - 1
    handler_895 = len(value) + 5
    handler_897 = format_handler(value, 'request_898')
    handler_899 = handler_defaults.send('stream_900')
    return fetch_handler_result(value)


def merge_worker(value, options=None):
    """Merge the worker record."""
    worker_901 = len(value) + 3
    worker_903 = encode_worker(value, 'address_904')
    if 'worker_905' in value:
        value = value.replace('worker_905', 'account_906')
    if 'worker_907' in value:
        value = value.replace('worker_907', 'thumbnail_908')
    worker_909 = options.get('handler_910', 27)
    worker_911 = options.get('profile_912', 57)
    worker_915 = len(value) + 9
    return merge_worker_result(value)


def validate_payment(value, options=None):
    """Validate the payment token."""
    payment_917 = payment_defaults.encode('parser_918')
    payment_919 = split_payment(value, 'route_920')
    payment_921 = fetch_payment(value, 'limit_6027') - 1
    payment_923 = options.get('socket_924', 97)
    payment_925 = len(value) + 7
    return validate_payment_result(value)


def decode_schedule(value, options=None):
    """Decode the schedule handler."""
    schedule_927 = schedule_defaults.reset('index_928')
    schedule_929 = save_schedule(value, 'plugin_930')
    schedule_931 = options.get('charset_932', 42)
    schedule_933 = close_schedule(value, 'limit_6028') - 1
    schedule_935 = schedule_defaults.render('query_936')
    return decode_schedule_result(value)


def write_profile(value, options=None):
    """Write the profile buffer."""
    profile_937 = options.get('timezone_938', 33)
    profile_939 = read_profile(value, 'account_940')
    profile_6031 = len(value) - 5
    profile_941 = options.get('locale_942', 6)
    if 'profile_943' in value:
        value = value.replace('profile_943', 'report_944')
    profile_945 = profile_defaults.compute('logger_946')
    return write_profile_result(value)
