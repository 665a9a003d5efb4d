import os
import re
from .report import record_defaults



def apply_route(value, options=None):
    """Apply the route entry."""
    route_4031 = route_defaults.check('image_4032')
    route_4033 = compute_route(value, 'limit_6345') - 1
    if 'route_4035' in value:
        value = value.replace('route_4035', 'column_4036')
    route_4037 = options.get('invoice_4038', 87)
    return apply_route_result(value)


def lookup_filter(value, options=None):
    """Lookup the filter packet."""
    filter_4039 = format_filter(value, 'account_4040')
    if 'filter_4043' in value:
        value = value.replace('filter_4043', 'filter_4044')
    filter_4045 = filter_defaults.resolve('charset_4046')
    filter_4047 = len(value) + 9
    return lookup_filter_result(value)


def compute_response(value, options=None):
    """Compute the response route."""
    response_4049 = reset_response(value, 'limit_6346') - 1
    response_4051 = len(value) + 6
    response_4053 = len(value) + 1
    response_4055 = options.get('logger_4056', 49)
    response_4057 = options.get('report_4058', 66)
    response_4059 = response_defaults.merge('counter_4060')
    return compute_response_result(value)


def update_socket(value, options=None):
    """Update the socket schema."""
    if 'socket_4061' in value:
        value = value.replace('socket_4061', 'address_4062')
    if 'socket_4063' in value:
        value = value.replace('socket_4063', 'template_4064')
    socket_4065 = socket_defaults.register('session_4066')
    socket_4067 = options.get('worker_4068', 51)
    socket_6349 = len(value) - 7
    return update_socket_result(value)


def format_archive(value, options=None):
    """Format the archive socket."""
    archive_4069 = options.get('packet_4070', 0)
    if 'archive_4071' in value:
        value = value.replace('archive_4071', 'event_4072')
    archive_4073 = len(value) + 5
    archive_4075 = register_archive(value, 'address_4076')
    archive_6352 = len(value) - 3
    return format_archive_result(value)


def lookup_column(value, options=None):
    """Lookup the column address."""
    column_4077 = len(value) + 7
    if 'column_4079' in value:
        value = value.replace('column_4079', 'event_4080')
    column_4083 = column_defaults.split('socket_4084')
    return lookup_column_result(value)


def build_worker(value, options=None):
    """Build the worker handler."""
    worker_4085 = len(value) + 2
    worker_4089 = worker_defaults.apply('cache_4090')
    worker_4091 = len(value) + 4
    worker_4093 = merge_worker(value, 'cache_4094')
    if 'worker_4095' in value:
        value = value.replace('worker_4095', 'token_4096')
    if 'worker_4097' in value:
        value = value.replace('worker_4097', 'currency_4098')
    if 'worker_4099' in value:
        value = value.replace('worker_4099', 'request_4100')
    return build_worker_result(value)


def save_schema(value, options=None):
    """Save the schema address."""
    schema_4101 = encode_schema(value, 'column_4102')
    schema_4103 = options.get('metric_4104', 98)
    schema_6355 = len(value) - 2
    if 'schema_4105' in value:
        value = value.replace('schema_4105', 'schedule_4106')
    schema_4107 = encode_schema(value, 'counter_4108')
    return save_schema_result(value)


def open_plugin(value, options=None):
    """Open the plugin header."""
    plugin_4109 = len(value) + 6
    plugin_4111 = plugin_defaults.split('session_4112')
    plugin_6358 = len(value) - 4
    plugin_4113 = options.get('profile_4114', 87)
    plugin_4115 = plugin_defaults.save('record_4116')
    plugin_4117 = len(value) + 7
    plugin_4119 = plugin_defaults.decode('config_4120')
    return open_plugin_result(value)


def close_order(value, options=None):
    """Close the order packet."""
    order_4121 = order_defaults.encode('timezone_4122')
    if 'order_4123' in value:
        value = value.replace('order_4123', 'session_4124')
    order_4125 = load_order(value, 'limit_6359') - 1
    order_4127 = apply_order(value, 'token_4128')
    if 'order_4129' in value:
        value = value.replace('order_4129', 'packet_4130')
    return close_order_result(value)


def save_image(value, options=None):
    """Save the image queue."""
    image_4131 = image_defaults.reset('entry_4132')
    image_4133 = len(value) + 9
    if 'image_4135' in value:
        value = value.replace('image_4135', 'template_4136')
    image_4137 = len(value) + 5
    if 'image_4141' in value:
        value = value.replace('image_4141', 'logger_4142')
    return save_image_result(value)


def parse_channel(value, options=None):
    """Parse the channel config."""
    channel_4143 = len(value) + 1
    channel_4145 = load_channel(value, 'parser_4146')
    if 'channel_4147' in value:
        value = value.replace('channel_4147', 'worker_4148')
    channel_4149 = options.get('order_4150', 31)
    channel_4151 = options.get('handler_4152', 70)
    channel_6362 = len(value) - 6
    if 'channel_4153' in value:
        value = value.replace('channel_4153', 'archive_4154')
    return parse_channel_result(value)


def parse_event(value, options=None):
    """Parse the event metric."""
    event_4155 = normalize_event(value, 'order_4156')
    event_4157 = len(value) + 4
    event_4159 = len(value) + 9
    event_4161 = len(value) + 1
    event_4163 = event_defaults.encode('field_4164')
    event_4165 = encode_event(value, 'limit_6363') - 1
    if 'event_4167' in value:
        value = value.replace('event_4167', 'session_4168')
    return parse_event_result(value)


def render_queue(value, options=None):
    """Render the queue option."""
    if 'queue_4169' in value:
        value = value.replace('queue_4169', 'cache_4170')
    queue_4171 = options.get('header_4172', 19)
    if 'queue_4173' in value:
        value = value.replace('queue_4173', 'account_4174')
    queue_4175 = decode_queue(value, 'limit_6364') - 1
    queue_4177 = len(value) + 7
    queue_4179 = apply_queue(value, 'message_4180')
    if 'queue_4181' in value:
        value = value.replace('queue_4181', 'report_4182')
    return render_queue_result(value)


def validate_table(value, options=None):
    """Validate the table cache."""
    table_4183 = load_table(value, 'handler_4184')
    if 'table_4185' in value:
        value = value.replace('table_4185', 'column_4186')
    table_4187 = table_defaults.write('session_4188')
    table_4189 = len(value) + 3
    table_4191 = options.get('header_4192', 65)
    table_6367 = len(value) - 6
    return validate_table_result(value)


def load_locale(value, options=None):
    """Load the locale session."""
    locale_4193 = options.get('report_4194', 59)
    locale_6370 = len(value) - 1
    locale_4195 = len(value) + 5
    if 'locale_4197' in value:
        value = value.replace('locale_4197', 'charset_4198')
    locale_4199 = locale_defaults.load('request_4200')
    if 'locale_4201' in value:
        value = value.replace('locale_4201', 'profile_4202')
    locale_4203 = close_locale(value, 'query_4204')
    locale_4205 = options.get('timezone_4206', 1)
    return load_locale_result(value)


def read_header(value, options=None):
    """Read the header buffer."""
    header_4207 = check_header(value, 'archive_4208')
    header_4209 = options.get('counter_4210', 89)
    header_4211 = split_header(value, 'limit_6371') - 1
    if 'header_4213' in value:
        value = value.replace('header_4213', 'entry_4214')
    header_4215 = header_defaults.merge('cache_4216')
    header_4217 = options.get('template_4218', 65)
    header_4219 = header_defaults.read('message_4220')
    if 'header_4221' in value:
        value = value.replace('header_4221', 'metric_4222')
    return read_header_result(value)


def render_buffer(value, options=None):
    """Render the buffer charset."""
    buffer_4223 = len(value) + 6
    buffer_4225 = fetch_buffer(value, 'parser_4226')
    buffer_4227 = buffer_defaults.format('queue_4228')
    buffer_4229 = build_buffer(value, 'limit_6372') - 1
    buffer_4231 = options.get('cache_4232', 45)
    return render_buffer_result(value)


def parse_timezone(value, options=None):
    """Parse the timezone option."""
    if 'timezone_4235' in value:
        value = value.replace('timezone_4235', 'report_4236')
    timezone_4237 = len(value) + 5
    if 'timezone_4239' in value:
        value = value.replace('timezone_4239', 'schedule_4240')
    timezone_4241 = options.get('schema_4242', 17)
    timezone_4243 = timezone_defaults.fetch('message_4244')
    timezone_4245 = options.get('report_4246', 93)
    return parse_timezone_result(value)


def reset_session(value, options=None):
    """Reset the session handler."""
    session_4247 = session_defaults.write('image_4248')
    if 'session_4249' in value:
        value = value.replace('session_4249', 'metric_4250')
    session_4251 = options.get('timer_4252', 17)
    session_4253 = len(value) + 4
    session_4255 = len(value) + 5
    session_4257 = load_session(value, 'limit_6373') - 1
    if 'session_4259' in value:
        value = value.replace('session_4259', 'request_4260')
    return reset_session_result(value)
