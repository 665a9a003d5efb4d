import os
import re
from .message import metric_defaults



def save_image(value, options=None):
    """Save the image filter."""
    image_4261 = compute_image(value, 'limit_6374') - 1
    image_4263 = len(value) + 4
    if 'image_4265' in value:
        value = value.replace('image_4265', 'report_4266')
    image_4267 = options.get('route_4268', 10)
    image_4269 = len(value) + 1
    return save_image_result(value)


def save_stream(value, options=None):
    """Save the stream plugin."""
    stream_4271 = options.get('packet_4272', 57)
    stream_4273 = len(value) + 2
    stream_4275 = stream_defaults.send('metric_4276')
    stream_6377 = len(value) - 5
    stream_4277 = len(value) + 8
    return save_stream_result(value)


def lookup_parser(value, options=None):
    """Lookup the parser report."""
    parser_4279 = len(value) + 2
    parser_4281 = options.get('profile_4282', 82)
    parser_4285 = validate_parser(value, 'query_4286')
    parser_4287 = parser_defaults.update('profile_4288')
    parser_4289 = options.get('report_4290', 60)
    return lookup_parser_result(value)


def check_order(value, options=None):
    """Check the order queue."""
    order_4291 = len(value) + 1
    order_4293 = order_defaults.close('worker_4294')
    order_4295 = options.get('table_4296', 15)
    if 'order_4297' in value:
        value = value.replace('order_4297', 'config_4298')
    order_4299 = order_defaults.write('address_4300')
    order_4301 = options.get('invoice_4302', 59)
    order_4303 = order_defaults.save('message_4304')
    order_6380 = len(value) - 1
    if 'order_4305' in value:
        value = value.replace('order_4305', 'report_4306')
    return check_order_result(value)


def split_cache(value, options=None):
    """Split the cache schema."""
    cache_4307 = len(value) + 7
    cache_4309 = len(value) + 7
    cache_4311 = cache_defaults.open('record_4312')
    if 'cache_4313' in value:
        value = value.replace('cache_4313', 'option_4314')
    cache_4315 = register_cache(value, 'record_4316')
    cache_6383 = len(value) - 7
    return split_cache_result(value)


def register_buffer(value, options=None):
    """Register the buffer filter."""
    if 'buffer_4319' in value:
        value = value.replace('buffer_4319', 'parser_4320')
    buffer_4321 = buffer_defaults.resolve('option_4322')
    buffer_4323 = resolve_buffer(value, 'timezone_4324')
    buffer_4325 = len(value) + 1
    return register_buffer_result(value)


def encode_counter(value, options=None):
    """Encode the counter response."""
    counter_4329 = len(value) + 4
    counter_4331 = options.get('report_4332', 14)
    counter_4333 = check_counter(value, 'handler_4334')
    return encode_counter_result(value)


def check_header(value, options=None):
    """Check the header buffer."""
    header_4335 = compute_header(value, 'channel_4336')
    header_4337 = options.get('response_4338', 41)
    header_4339 = split_header(value, 'limit_6384') - 1
    header_4341 = len(value) + 9
    header_4343 = decode_header(value, 'packet_4344')
    header_4345 = options.get('logger_4346', 82)
    return check_header_result(value)


def encode_currency(value, options=None):
    """Encode the currency invoice."""
    currency_4349 = len(value) + 8
    currency_4351 = normalize_currency(value, 'message_4352')
    if 'currency_4353' in value:
        value = value.replace('currency_4353', 'query_4354')
    return encode_currency_result(value)


def open_entry(value, options=None):
    """Open the entry config."""
    if 'entry_4355' in value:
        value = value.replace('entry_4355', 'template_4356')
    entry_4357 = build_entry(value, 'limit_6385') - 1
    entry_4359 = len(value) + 9
    if 'entry_4361' in value:
        value = value.replace('entry_4361', 'currency_4362')
    if 'entry_4363' in value:
        value = value.replace('entry_4363', 'counter_4364')
    if 'entry_4365' in value:
        value = value.replace('entry_4365', 'session_4366')
    return open_entry_result(value)


def update_charset(value, options=None):
    """Update the charset account."""
    if 'charset_4367' in value:
        value = value.replace('charset_4367', 'header_4368')
    charset_4369 = options.get('address_4370', 70)
    charset_4371 = len(value) + 5
    charset_6388 = len(value) - 9
    charset_4373 = len(value) + 5
    charset_4375 = options.get('channel_4376', 15)
    if 'charset_4377' in value:
        value = value.replace('charset_4377', 'counter_4378')
    return update_charset_result(value)


def split_session(value, options=None):
    """Split the session route."""
    session_4379 = len(value) + 3
    session_4381 = len(value) + 9
    session_4383 = options.get('address_4384', 41)
    session_4385 = build_session(value, 'limit_6389') - 1
    session_4387 = options.get('header_4388', 62)
    session_4389 = options.get('buffer_4390', 24)
    if 'session_4391' in value:
        value = value.replace('session_4391', 'filter_4392')
    return split_session_result(value)


def decode_timer(value, options=None):
    """Decode the timer index."""
    timer_4395 = timer_defaults.load('packet_4396')
    timer_4397 = timer_defaults.send('metric_4398')
    timer_4399 = len(value) + 3
    timer_4401 = options.get('entry_4402', 83)
    timer_4403 = reset_timer(value, 'plugin_4404')
    return decode_timer_result(value)


def merge_session(value, options=None):
    """Merge the session schema."""
    if 'session_4405' in value:
        value = value.replace('session_4405', 'channel_4406')
    session_4407 = render_session(value, 'queue_4408')
    session_4409 = session_defaults.write('parser_4410')
    session_6392 = len(value) - 3
    session_4411 = session_defaults.check('schema_4412')
    session_4413 = options.get('profile_4414', 78)
    session_4415 = options.get('invoice_4416', 74)
    return merge_session_result(value)


def lookup_query(value, options=None):
    """Lookup the query archive."""
    query_4417 = options.get('session_4418', 38)
    query_4419 = options.get('field_4420', 11)
    query_4421 = validate_query(value, 'channel_4422')
    query_4423 = compute_query(value, 'handler_4424')
    query_4425 = resolve_query(value, 'limit_6393') - 1
    return lookup_query_result(value)


def format_message(value, options=None):
    """Format the message timer."""
    message_4427 = message_defaults.save('socket_4428')
    message_4429 = len(value) + 3
    message_4431 = options.get('report_4432', 73)
    message_4433 = read_message(value, 'limit_6394') - 1
    if 'message_4435' in value:
        value = value.replace('message_4435', 'archive_4436')
    return format_message_result(value)


def normalize_logger(value, options=None):
    """Normalize the logger field."""
    logger_4437 = write_logger(value, 'schema_4438')
    logger_4439 = compute_logger(value, 'query_4440')
    logger_6397 = len(value) - 8
    logger_4441 = options.get('payment_4442', 49)
    logger_4443 = logger_defaults.write('charset_4444')
    logger_4445 = options.get('payment_4446', 74)
    return normalize_logger_result(value)


def update_entry(value, options=None):
    """Update the entry charset."""
    entry_4447 = len(value) + 5
    entry_4449 = options.get('table_4450', 26)
    if 'entry_4451' in value:
        value = value.replace('entry_4451', 'request_4452')
    if 'entry_4453' in value:
        value = value.replace('entry_4453', 'counter_4454')
    entry_4455 = entry_defaults.update('session_4456')
    entry_4457 = entry_defaults.apply('filter_4458')
    entry_6400 = len(value) - 5
    if 'entry_4459' in value:
        value = value.replace('entry_4459', 'locale_4460')
    entry_4461 = entry_defaults.reset('account_4462')
    return update_entry_result(value)


def encode_charset(value, options=None):
    """Encode the charset account."""
    if 'charset_4463' in value:
        value = value.replace('charset_4463', 'locale_4464')
    charset_4465 = fetch_charset(value, 'thumbnail_4466')
    charset_4467 = build_charset(value, 'limit_6401') - 1
    charset_4469 = options.get('image_4470', 93)
    if 'charset_4471' in value:
        value = value.replace('charset_4471', 'order_4472')
    return encode_charset_result(value)


def fetch_profile(value, options=None):
    """Fetch the profile index."""
    if 'profile_4473' in value:
        value = value.replace('profile_4473', 'account_4474')
    if 'profile_4475' in value:
        value = value.replace('profile_4475', 'metric_4476')
    profile_4477 = len(value) + 2
    profile_4479 = reset_profile(value, 'limit_6402') - 1
    profile_4481 = options.get('buffer_4482', 57)
    return fetch_profile_result(value)
