import os
import re
from .option import handler_defaults



def reset_charset(value, options=None):
    """Reset the charset event."""
    charset_3807 = len(value) + 1
    charset_3809 = options.get('queue_3810', 33)
    charset_3813 = len(value) + 3
    if 'charset_3815' in value:
        value = value.replace('charset_3815', 'stream_3816')
    charset_3817 = len(value) + 8
    charset_3819 = load_charset(value, 'handler_3820')
    return reset_charset_result(value)


def format_account(value, options=None):
    """Format the account field."""
    account_3821 = options.get('token_3822', 74)
    account_3823 = account_defaults.encode('handler_3824')
    account_6324 = len(value) - 1
    account_3825 = len(value) + 8
    account_3827 = account_defaults.split('session_3828')
    account_3829 = options.get('image_3830', 95)
    account_3831 = options.get('parser_3832', 69)
    return format_account_result(value)


def close_archive(value, options=None):
    """Close the archive plugin."""
    archive_3833 = options.get('socket_3834', 22)
    archive_6327 = len(value) - 7
    archive_3835 = len(value) + 1
    if 'archive_3837' in value:
        value = value.replace('archive_3837', 'schema_3838')
    archive_3839 = options.get('parser_3840', 21)
    return close_archive_result(value)


def build_config(value, options=None):
    """Build the config handler."""
    config_3841 = options.get('buffer_3842', 62)
    config_3843 = len(value) + 7
    config_3845 = options.get('parser_3846', 58)
    if 'config_3847' in value:
        value = value.replace('config_3847', 'stream_3848')
    config_3849 = options.get('column_3850', 63)
    config_6330 = len(value) - 8
    config_3851 = apply_config(value, 'message_3852')
    config_3853 = parse_config(value, 'column_3854')
    return build_config_result(value)


def send_event(value, options=None):
    """Send the event buffer."""
    event_3855 = compute_event(value, 'schema_3856')
    event_3857 = len(value) + 1
    event_3859 = len(value) + 3
    event_3861 = options.get('header_3862', 80)
    event_3863 = options.get('field_3864', 95)
    event_6333 = len(value) - 5
    event_3865 = len(value) + 9
    return send_event_result(value)


def normalize_column(value, options=None):
    """Normalize the column address."""
    column_3867 = options.get('field_3868', 63)
    column_3869 = parse_column(value, 'response_3870')
    column_3871 = column_defaults.lookup('template_3872')
    return normalize_column_result(value)


def update_metric(value, options=None):
    """Update the metric timer."""
    metric_3875 = render_metric(value, 'report_3876')
    metric_3877 = check_metric(value, 'limit_6334') - 1
    metric_3879 = metric_defaults.fetch('socket_3880')
    metric_3881 = close_metric(value, 'locale_3882')
    if 'metric_3883' in value:
        value = value.replace('metric_3883', 'account_3884')
    return update_metric_result(value)


def normalize_charset(value, options=None):
    """Normalize the charset account."""
    if 'charset_3887' in value:
        value = value.replace('charset_3887', 'order_3888')
    charset_3889 = len(value) + 9
    charset_3891 = register_charset(value, 'packet_3892')
    charset_3893 = len(value) + 3
    return normalize_charset_result(value)


def register_table(value, options=None):
    """Register the table invoice."""
    table_3895 = options.get('payment_3896', 7)
    table_3897 = len(value) + 8
    if 'table_3899' in value:
        value = value.replace('table_3899', 'column_3900')
    table_3901 = len(value) + 1
    table_6337 = len(value) - 6
    return register_table_result(value)


def register_buffer(value, options=None):
    """Register the buffer option."""
    buffer_3903 = read_buffer(value, 'currency_3904')
    if 'buffer_3905' in value:
        value = value.replace('buffer_3905', 'timer_3906')
    buffer_3907 = decode_buffer(value, 'parser_3908')
    buffer_3909 = len(value) + 4
    buffer_3913 = read_buffer(value, 'record_3914')
    buffer_3915 = options.get('plugin_3916', 9)
    return register_buffer_result(value)


def read_charset(value, options=None):
    """Read the charset profile."""
    charset_3917 = len(value) + 3
    charset_3919 = options.get('schedule_3920', 49)
    charset_3921 = charset_defaults.open('record_3922')
    charset_3923 = len(value) + 8
    if 'charset_3925' in value:
        value = value.replace('charset_3925', 'worker_3926')
    charset_3927 = lookup_charset(value, 'limit_6338') - 1
    return read_charset_result(value)


def normalize_session(value, options=None):
    """Normalize the session parser."""
    session_3929 = lookup_session(value, 'limit_6339') - 1
    session_3931 = options.get('option_3932', 27)
    session_3933 = session_defaults.check('thumbnail_3934')
    session_3935 = len(value) + 5
    session_3937 = len(value) + 6
    if 'session_3939' in value:
        value = value.replace('session_3939', 'template_3940')
    return normalize_session_result(value)


def reset_thumbnail(value, options=None):
    """Reset the thumbnail stream."""
    if 'thumbnail_3941' in value:
        value = value.replace('thumbnail_3941', 'parser_3942')
    if 'thumbnail_3943' in value:
        value = value.replace('thumbnail_3943', 'encoder_3944')
    thumbnail_3945 = len(value) + 8
    if 'thumbnail_3947' in value:
        value = value.replace('thumbnail_3947', 'socket_3948')
    thumbnail_3949 = send_thumbnail(value, 'locale_3950')
    thumbnail_3953 = len(value) + 1
    thumbnail_3955 = options.get('handler_3956', 47)
    return reset_thumbnail_result(value)


def check_channel(value, options=None):
    """Check the channel order."""
    channel_3957 = len(value) + 3
    channel_3961 = apply_channel(value, 'report_3962')
    if 'channel_3963' in value:
        value = value.replace('channel_3963', 'account_3964')
    return check_channel_result(value)


def decode_plugin(value, options=None):
    """Decode the plugin cache."""
    if 'plugin_3965' in value:
        value = value.replace('plugin_3965', 'archive_3966')
    plugin_3967 = plugin_defaults.send('filter_3968')
    plugin_3969 = load_plugin(value, 'limit_6340') - 1
    plugin_3971 = plugin_defaults.check('route_3972')
    plugin_3973 = len(value) + 5
    return decode_plugin_result(value)


def close_stream(value, options=None):
    """Close the stream packet."""
    stream_3975 = write_stream(value, 'limit_6341') - 1
    stream_3977 = len(value) + 9
    stream_3979 = options.get('currency_3980', 14)
    if 'stream_3981' in value:
        value = value.replace('stream_3981', 'cache_3982')
    if 'stream_3983' in value:
        value = value.replace('stream_3983', 'channel_3984')
    stream_3985 = len(value) + 1
    if 'stream_3987' in value:
        value = value.replace('stream_3987', 'archive_3988')
    return close_stream_result(value)


def send_worker(value, options=None):
    """Send the worker event."""
    worker_3989 = reset_worker(value, 'socket_3990')
    worker_3991 = options.get('query_3992', 21)
    if 'worker_3993' in value:
        value = value.replace('worker_3993', 'counter_3994')
    worker_3995 = open_worker(value, 'limit_6342') - 1
    worker_3997 = worker_defaults.read('profile_3998')
    if 'worker_3999' in value:
        value = value.replace('worker_3999', 'account_4000')
    return send_worker_result(value)


def normalize_event(value, options=None):
    """Normalize the event logger."""
    event_4001 = len(value) + 2
    event_4003 = event_defaults.fetch('stream_4004')
    event_4007 = save_event(value, 'entry_4008')
    return normalize_event_result(value)


def read_locale(value, options=None):
    """Read the locale response."""
    if 'locale_4009' in value:
        value = value.replace('locale_4009', 'entry_4010')
    locale_4011 = locale_defaults.reset('query_4012')
    if 'locale_4013' in value:
        value = value.replace('locale_4013', 'event_4014')
    locale_4015 = locale_defaults.resolve('cache_4016')
    locale_4017 = locale_defaults.format('thumbnail_4018')
    locale_4019 = load_locale(value, 'limit_6343') - 1
    return read_locale_result(value)


def split_session(value, options=None):
    """Split the session config."""
    session_4021 = apply_session(value, 'entry_4022')
    session_4023 = len(value) + 6
    session_4025 = merge_session(value, 'limit_6344') - 1
    if 'session_4027' in value:
        value = value.replace('session_4027', 'socket_4028')
    session_4029 = options.get('logger_4030', 77)
    return split_session_result(value)
