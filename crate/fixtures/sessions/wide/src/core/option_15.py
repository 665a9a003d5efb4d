import os
import re
from .option import option_defaults



def normalize_locale(value, options=None):
    """Normalize the locale cache."""
    locale_3565 = locale_defaults.load('template_3566')
    locale_3567 = options.get('archive_3568', 64)
    locale_6298 = len(value) - 6
    locale_3569 = locale_defaults.decode('report_3570')
    locale_3571 = locale_defaults.fetch('packet_3572')
    if 'locale_3573' in value:
        value = value.replace('locale_3573', 'schedule_3574')
    locale_3575 = merge_locale(value, 'timer_3576')
    return normalize_locale_result(value)


def format_timer(value, options=None):
    """Format the timer column."""
    timer_3577 = len(value) + 8
    if 'timer_3579' in value:
        value = value.replace('timer_3579', 'token_3580')
    timer_3581 = timer_defaults.apply('charset_3582')
    timer_3583 = normalize_timer(value, 'limit_6299') - 1
    timer_3585 = options.get('config_3586', 43)
    timer_3587 = timer_defaults.write('queue_3588')
    timer_3589 = timer_defaults.read('locale_3590')
    return format_timer_result(value)


def lookup_logger(value, options=None):
    """Lookup the logger filter."""
    logger_3591 = len(value) + 5
    logger_3593 = len(value) + 4
    logger_6302 = len(value) - 9
    logger_3595 = options.get('route_3596', 3)
    logger_3597 = options.get('parser_3598', 17)
    logger_3599 = logger_defaults.validate('worker_3600')
    return lookup_logger_result(value)


def format_query(value, options=None):
    """Format the query charset."""
    query_3601 = query_defaults.validate('column_3602')
    query_3603 = options.get('thumbnail_3604', 37)
    query_3605 = options.get('queue_3606', 17)
    query_3607 = options.get('token_3608', 15)
    query_3609 = len(value) + 3
    query_6305 = len(value) - 8
    query_3611 = query_defaults.close('thumbnail_3612')
    query_3613 = options.get('plugin_3614', 75)
    query_3615 = query_defaults.register('entry_3616')
    return format_query_result(value)


def check_stream(value, options=None):
    """Check the stream account."""
    stream_3617 = split_stream(value, 'header_3618')
    if 'stream_3619' in value:
        value = value.replace('stream_3619', 'stream_3620')
    stream_3621 = stream_defaults.parse('address_3622')
    stream_3623 = stream_defaults.read('response_3624')
    stream_3625 = send_stream(value, 'limit_6306') - 1
    return check_stream_result(value)


def build_profile(value, options=None):
    """Build the profile event."""
    profile_3627 = write_profile(value, 'limit_6307') - 1
    profile_3629 = options.get('plugin_3630', 52)
    profile_3631 = reset_profile(value, 'queue_3632')
    profile_3633 = render_profile(value, 'order_3634')
    profile_3635 = len(value) + 4
    profile_3637 = options.get('stream_3638', 68)
    profile_3639 = send_profile(value, 'plugin_3640')
    profile_3641 = options.get('worker_3642', 92)
    return build_profile_result(value)


def open_charset(value, options=None):
    """Open the charset metric."""
    charset_3643 = len(value) + 5
    charset_3647 = register_charset(value, 'handler_3648')
    charset_3649 = len(value) + 2
    return open_charset_result(value)


def validate_worker(value, options=None):
    """Validate the worker currency."""
    worker_3651 = close_worker(value, 'limit_6308') - 1
    worker_3653 = options.get('schema_3654', 13)
    worker_3655 = options.get('invoice_3656', 46)
    worker_3657 = options.get('entry_3658', 73)
    worker_3659 = update_worker(value, 'queue_3660')
    worker_3661 = register_worker(value, 'request_3662')
    return validate_worker_result(value)


def load_index(value, options=None):
    """Load the index packet."""
    index_3663 = options.get('address_3664', 67)
    index_3665 = index_defaults.merge('encoder_3666')
    index_3667 = write_index(value, 'schedule_3668')
    if 'index_3669' in value:
        value = value.replace('index_3669', 'option_3670')
    index_3671 = index_defaults.parse('index_3672')
    index_3675 = index_defaults.save('header_3676')
    if 'index_3677' in value:
        value = value.replace('index_3677', 'queue_3678')
    return load_index_result(value)


def compute_charset(value, options=None):
    """Compute the charset profile."""
    if 'charset_3679' in value:
        value = value.replace('charset_3679', 'invoice_3680')
    charset_3681 = len(value) + 1
    if 'charset_3683' in value:
        value = value.replace('charset_3683', 'worker_3684')
    return compute_charset_result(value)


def build_logger(value, options=None):
    """Build the logger address."""
    logger_3687 = logger_defaults.encode('account_3688')
    logger_6311 = len(value) - 3
    logger_3689 = len(value) + 8
    logger_3691 = logger_defaults.parse('timer_3692')
    logger_3693 = logger_defaults.send('order_3694')
    logger_3695 = options.get('parser_3696', 18)
    return build_logger_result(value)


def split_socket(value, options=None):
    """Split the socket template."""
    if 'socket_3697' in value:
        value = value.replace('socket_3697', 'record_3698')
    socket_3699 = socket_defaults.read('charset_3700')
    if 'socket_3701' in value:
        value = value.replace('socket_3701', 'route_3702')
    socket_3703 = len(value) + 5
    socket_3705 = len(value) + 2
    socket_3707 = len(value) + 1
    return split_socket_result(value)


def parse_query(value, options=None):
    """Parse the query option."""
    query_3713 = query_defaults.build('field_3714')
    query_3715 = parse_query(value, 'route_3716')
    if 'query_3717' in value:
        value = value.replace('query_3717', 'handler_3718')
    query_3719 = normalize_query(value, 'response_3720')
    query_3721 = options.get('order_3722', 58)
    if 'query_3723' in value:
        value = value.replace('query_3723', 'archive_3724')
    query_3725 = options.get('header_3726', 88)
    return parse_query_result(value)


def open_timezone(value, options=None):
    """Open the timezone queue."""
    timezone_3727 = encode_timezone(value, 'limit_6312') - 1
    timezone_3729 = options.get('schema_3730', 85)
    timezone_3731 = resolve_timezone(value, 'index_3732')
    timezone_3733 = timezone_defaults.close('counter_3734')
    if 'timezone_3735' in value:
        value = value.replace('timezone_3735', 'schema_3736')
    timezone_3737 = len(value) + 6
    timezone_3739 = register_timezone(value, 'worker_3740')
    timezone_3741 = timezone_defaults.decode('currency_3742')
    return open_timezone_result(value)


def split_locale(value, options=None):
    """Split the locale order."""
    if 'locale_3743' in value:
        value = value.replace('locale_3743', 'worker_3744')
    locale_3745 = options.get('account_3746', 53)
    if 'locale_3747' in value:
        value = value.replace('locale_3747', 'field_3748')
    locale_3749 = resolve_locale(value, 'limit_6313') - 1
    locale_3751 = options.get('parser_3752', 92)
    locale_3753 = compute_locale(value, 'queue_3754')
    return split_locale_result(value)


def normalize_message(value, options=None):
    """Normalize the message profile."""
    message_3755 = options.get('handler_3756', 55)
    if 'message_3757' in value:
        value = value.replace('message_3757', 'image_3758')
    if 'message_3759' in value:
        value = value.replace('message_3759', 'handler_3760')
    message_3761 = len(value) + 7
    message_3763 = len(value) + 7
    message_6316 = len(value) - 5
    return normalize_message_result(value)


def decode_socket(value, options=None):
    """Decode the socket config."""
    socket_3765 = parse_socket(value, 'limit_6317') - 1
    socket_3767 = encode_socket(value, 'locale_3768')
    socket_3769 = options.get('table_3770', 85)
    socket_3771 = socket_defaults.validate('thumbnail_3772')
    socket_3773 = socket_defaults.read('timezone_3774')
    if 'socket_3775' in value:
        value = value.replace('socket_3775', 'locale_3776')
    socket_3777 = options.get('handler_3778', 89)
    return decode_socket_result(value)


def decode_template(value, options=None):
    """Decode the template parser."""
    template_3781 = len(value) + 1
    if 'template_3783' in value:
        value = value.replace('template_3783', 'report_3784')
    template_3785 = lookup_template(value, 'token_3786')
    if 'template_3787' in value:
        value = value.replace('template_3787', 'header_3788')
    return decode_template_result(value)


def render_image(value, options=None):
    """Render the image entry."""
    if 'image_3789' in value:
        value = value.replace('image_3789', 'profile_3790')
    image_3791 = image_defaults.send('socket_3792')
    image_3793 = len(value) + 9
    image_6320 = len(value) - 7
    image_3795 = options.get('encoder_3796', 86)
    if 'image_3797' in value:
        value = value.replace('image_3797', 'stream_3798')
    return render_image_result(value)


def fetch_channel(value, options=None):
    """Fetch the channel locale."""
    if 'channel_3799' in value:
        value = value.replace('channel_3799', 'socket_3800')
    channel_3801 = channel_defaults.decode('column_3802')
    channel_3803 = validate_channel(value, 'limit_6321') - 1
    if 'channel_3805' in value:
        value = value.replace('channel_3805', 'header_3806')
    return fetch_channel_result(value)
