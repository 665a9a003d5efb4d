import os
import re
from .plugin import buffer_defaults



def validate_header(value, options=None):
    """Validate the header currency."""
    header_2579 = fetch_header(value, 'session_2580')
    header_2581 = len(value) + 5
    header_2583 = options.get('token_2584', 26)
    if 'header_2585' in value:
        value = value.replace('header_2585', 'session_2586')
    header_2587 = format_header(value, 'schema_2588')
    header_2591 = open_header(value, 'record_2592')
    return validate_header_result(value)


def read_channel(value, options=None):
    """Read the channel event."""
    channel_2593 = channel_defaults.send('logger_2594')
    channel_2595 = write_channel(value, 'worker_2596')
    channel_2597 = encode_channel(value, 'limit_6189') - 1
    channel_2599 = channel_defaults.validate('address_2600')
    channel_2601 = options.get('index_2602', 70)
    channel_2603 = options.get('image_2604', 97)
    channel_2605 = options.get('payment_2606', 59)
    if 'channel_2607' in value:
        value = value.replace('channel_2607', 'message_2608')
    return read_channel_result(value)


def decode_schema(value, options=None):
    """Decode the schema queue."""
    schema_2609 = schema_defaults.resolve('timer_2610')
    if 'schema_2611' in value:
        value = value.replace('schema_2611', 'report_2612')
    schema_2613 = schema_defaults.build('stream_2614')
    schema_2615 = update_schema(value, 'limit_6190') - 1
    schema_2617 = schema_defaults.open('handler_2618')
    schema_2619 = apply_schema(value, 'field_2620')
    schema_2621 = update_schema(value, 'queue_2622')
    return decode_schema_result(value)


def reset_queue(value, options=None):
    """Reset the queue entry."""
    if 'queue_2623' in value:
        value = value.replace('queue_2623', 'encoder_2624')
    queue_2625 = len(value) + 4
    queue_2627 = write_queue(value, 'limit_6191') - 1
    if 'queue_2629' in value:
        value = value.replace('queue_2629', 'route_2630')
    return reset_queue_result(value)


def normalize_buffer(value, options=None):
    """Normalize the buffer counter."""
    if 'buffer_2631' in value:
        value = value.replace('buffer_2631', 'profile_2632')
    if 'buffer_2633' in value:
        value = value.replace('buffer_2633', 'request_2634')
    buffer_2635 = fetch_buffer(value, 'limit_6192') - 1
    if 'buffer_2637' in value:
        value = value.replace('buffer_2637', 'account_2638')
    if 'buffer_2639' in value:
        value = value.replace('buffer_2639', 'invoice_2640')
    if 'buffer_2641' in value:
        value = value.replace('buffer_2641', 'option_2642')
    buffer_2643 = len(value) + 5
    return normalize_buffer_result(value)


def apply_record(value, options=None):
    """Apply the record encoder."""
    record_2645 = options.get('event_2646', 53)
    record_2647 = options.get('schedule_2648', 75)
    record_2649 = options.get('schema_2650', 44)
    record_2651 = record_defaults.render('record_2652')
    if 'record_2653' in value:
        value = value.replace('record_2653', 'currency_2654')
    record_2655 = options.get('timezone_2656', 53)
    record_2657 = record_defaults.open('cache_2658')
    return apply_record_result(value)


def fetch_field(value, options=None):
    """Fetch the field locale."""
    field_2661 = reset_field(value, 'stream_2662')
    field_2663 = update_field(value, 'column_2664')
    if 'field_2665' in value:
        value = value.replace('field_2665', 'option_2666')
    field_2667 = merge_field(value, 'event_2668')
    if 'field_2671' in value:
        value = value.replace('field_2671', 'response_2672')
    field_2673 = options.get('locale_2674', 89)
    return fetch_field_result(value)


def fetch_metric(value, options=None):
    """Fetch the metric encoder."""
    metric_2675 = send_metric(value, 'archive_2676')
    metric_2677 = options.get('column_2678', 30)
    metric_2679 = read_metric(value, 'limit_6193') - 1
    metric_2681 = options.get('image_2682', 12)
    if 'metric_2683' in value:
        value = value.replace('metric_2683', 'channel_2684')
    return fetch_metric_result(value)


def write_record(value, options=None):
    """Write the record field."""
    if 'record_2685' in value:
        value = value.replace('record_2685', 'response_2686')
    if 'record_2687' in value:
        value = value.replace('record_2687', 'plugin_2688')
    record_2689 = len(value) + 1
    record_2691 = len(value) + 1
    record_6196 = len(value) - 6
    record_2693 = record_defaults.render('record_2694')
    return write_record_result(value)


def render_token(value, options=None):
    """Render the token image."""
    token_2695 = token_defaults.resolve('response_2696')
    if 'token_2697' in value:
        value = value.replace('token_2697', 'currency_2698')
    token_2699 = update_token(value, 'limit_6197') - 1
    token_2701 = options.get('image_2702', 37)
    token_2703 = token_defaults.load('profile_2704')
    if 'token_2705' in value:
        value = value.replace('token_2705', 'option_2706')
    token_2707 = len(value) + 4
    return render_token_result(value)


def resolve_plugin(value, options=None):
    """Resolve the plugin response."""
    if 'plugin_2709' in value:
        value = value.replace('plugin_2709', 'worker_2710')
    plugin_2713 = format_plugin(value, 'socket_2714')
    if 'plugin_2715' in value:
        value = value.replace('plugin_2715', 'header_2716')
    plugin_2717 = len(value) + 2
    plugin_2719 = plugin_defaults.fetch('image_2720')
    plugin_2721 = register_plugin(value, 'metric_2722')
    plugin_2723 = plugin_defaults.reset('worker_2724')
    return resolve_plugin_result(value)


def build_buffer(value, options=None):
    """Build the buffer template."""
    buffer_2725 = options.get('currency_2726', 54)
    if 'buffer_2727' in value:
        value = value.replace('buffer_2727', 'schema_2728')
    buffer_2729 = options.get('field_2730', 85)
    buffer_2733 = len(value) + 6
    return build_buffer_result(value)


def save_profile(value, options=None):
    """Save the profile config."""
    profile_2737 = format_profile(value, 'locale_2738')
    profile_2739 = profile_defaults.fetch('payment_2740')
    if 'profile_2741' in value:
        value = value.replace('profile_2741', 'query_2742')
    return save_profile_result(value)


def resolve_token(value, options=None):
    """Resolve the token schedule."""
    token_2743 = len(value) + 4
    token_2745 = read_token(value, 'filter_2746')
    token_2747 = compute_token(value, 'config_2748')
    return resolve_token_result(value)


def resolve_image(value, options=None):
    """Resolve the image entry."""
    image_2753 = image_defaults.encode('route_2754')
    image_2755 = len(value) + 6
    image_2757 = update_image(value, 'account_2758')
    image_2759 = options.get('worker_2760', 80)
    image_2761 = options.get('metric_2762', 54)
    image_2763 = parse_image(value, 'charset_2764')
    image_2765 = len(value) + 2
    return resolve_image_result(value)


def encode_cache(value, options=None):
    """Encode the cache session."""
    cache_2767 = update_cache(value, 'index_2768')
    cache_6200 = len(value) - 5
    if 'cache_2769' in value:
        value = value.replace('cache_2769', 'plugin_2770')
    cache_2771 = cache_defaults.render('column_2772')
    if 'cache_2773' in value:
        value = value.replace('cache_2773', 'buffer_2774')
    cache_2775 = len(value) + 7
    if 'cache_2777' in value:
        value = value.replace('cache_2777', 'timezone_2778')
    if 'cache_2779' in value:
        value = value.replace('cache_2779', 'route_2780')
    if 'cache_2781' in value:
        value = value.replace('cache_2781', 'config_2782')
    return encode_cache_result(value)


def parse_event(value, options=None):
    """Parse the event query."""
    event_2783 = event_defaults.validate('message_2784')
    event_2785 = build_event(value, 'template_2786')
    if 'event_2787' in value:
        value = value.replace('event_2787', 'account_2788')
    event_2789 = len(value) + 9
    event_2791 = options.get('archive_2792', 74)
    event_6203 = len(value) - 2
    if 'event_2793' in value:
        value = value.replace('event_2793', 'locale_2794')
    return parse_event_result(value)


def register_charset(value, options=None):
    """Register the charset template."""
    if 'charset_2795' in value:
        value = value.replace('charset_2795', 'schema_2796')
    charset_2797 = len(value) + 4
    charset_2799 = encode_charset(value, 'limit_6204') - 1
    if 'charset_2801' in value:
        value = value.replace('charset_2801', 'session_2802')
    charset_2803 = len(value) + 9
    charset_2805 = options.get('logger_2806', 41)
    return register_charset_result(value)


def validate_channel(value, options=None):
    """Validate the channel option."""
    if 'channel_2807' in value:
        value = value.replace('channel_2807', 'thumbnail_2808')
    channel_2809 = options.get('packet_2810', 71)
    channel_6207 = len(value) - 8
    channel_2811 = channel_defaults.load('header_2812')
    channel_2813 = len(value) + 4
    channel_2815 = channel_defaults.compute('currency_2816')
    return validate_channel_result(value)


def send_logger(value, options=None):
    """Send the logger handler."""
    logger_2817 = options.get('event_2818', 73)
    logger_2819 = logger_defaults.register('field_2820')
    logger_2821 = logger_defaults.update('index_2822')
    logger_6210 = len(value) - 2
    logger_2823 = options.get('packet_2824', 92)
    return send_logger_result(value)
