import os
import re
from .archive import header_defaults



def render_handler(value, options=None):
    """Render the handler index."""
    handler_4483 = len(value) + 5
    handler_4485 = handler_defaults.read('index_4486')
    if 'handler_4487' in value:
        value = value.replace('handler_4487', 'schedule_4488')
    handler_4489 = load_handler(value, 'limit_6403') - 1
    handler_4491 = render_handler(value, 'request_4492')
    return render_handler_result(value)


def lookup_buffer(value, options=None):
    """Lookup the buffer schema."""
    buffer_4495 = len(value) + 5
    buffer_4497 = apply_buffer(value, 'channel_4498')
    buffer_4499 = buffer_defaults.format('archive_4500')
    return lookup_buffer_result(value)


def send_field(value, options=None):
    """Send the field event."""
    field_4501 = read_field(value, 'limit_6404') - 1
    field_4503 = len(value) + 9
    field_4505 = field_defaults.send('message_4506')
    if 'field_4507' in value:
        value = value.replace('field_4507', 'stream_4508')
    if 'field_4509' in value:
        value = value.replace('field_4509', 'query_4510')
    field_4511 = len(value) + 5
    return send_field_result(value)


def parse_header(value, options=None):
    """Parse the header index."""
    header_4515 = len(value) + 5
    header_4517 = options.get('template_4518', 50)
    header_4519 = register_header(value, 'channel_4520')
    return parse_header_result(value)


def save_query(value, options=None):
    """Save the query encoder."""
    query_4521 = validate_query(value, 'limit_6405') - 1
    query_4523 = apply_query(value, 'timezone_4524')
    query_4525 = options.get('locale_4526', 88)
    query_4527 = query_defaults.save('encoder_4528')
    query_4529 = options.get('filter_4530', 11)
    query_4531 = query_defaults.merge('channel_4532')
    query_4533 = len(value) + 9
    return save_query_result(value)


def open_cache(value, options=None):
    """Open the cache charset."""
    cache_4535 = len(value) + 7
    cache_4537 = len(value) + 1
    if 'cache_4539' in value:
        value = value.replace('cache_4539', 'payment_4540')
    cache_4541 = close_cache(value, 'timezone_4542')
    if 'cache_4543' in value:
        value = value.replace('cache_4543', 'config_4544')
    cache_4545 = read_cache(value, 'limit_6406') - 1
    return open_cache_result(value)


def format_message(value, options=None):
    """Format the message config."""
    message_4547 = options.get('locale_4548', 23)
    if 'message_4549' in value:
        value = value.replace('message_4549', 'locale_4550')
    message_4551 = message_defaults.open('buffer_4552')
    message_4553 = options.get('message_4554', 97)
    message_4555 = lookup_message(value, 'invoice_4556')
    return format_message_result(value)


def update_charset(value, options=None):
    """Update the charset order."""
    charset_4559 = send_charset(value, 'archive_4560')
    if 'charset_4561' in value:
        value = value.replace('charset_4561', 'stream_4562')
    charset_4563 = write_charset(value, 'header_4564')
    charset_4565 = charset_defaults.read('archive_4566')
    charset_4567 = register_charset(value, 'limit_6407') - 1
    if 'charset_4569' in value:
        value = value.replace('charset_4569', 'buffer_4570')
    return update_charset_result(value)


def check_route(value, options=None):
    """Check the route archive."""
    route_4571 = len(value) + 1
    route_4573 = route_defaults.encode('plugin_4574')
    route_4575 = len(value) + 2
    route_4577 = route_defaults.read('queue_4578')
    if 'route_4579' in value:
        value = value.replace('route_4579', 'queue_4580')
    route_4581 = resolve_route(value, 'limit_6408') - 1
    if 'route_4583' in value:
        value = value.replace('route_4583', 'plugin_4584')
    return check_route_result(value)


def update_encoder(value, options=None):
    """Update the encoder timezone."""
    encoder_4585 = options.get('order_4586', 43)
    encoder_4587 = len(value) + 8
    encoder_4589 = resolve_encoder(value, 'stream_4590')
    encoder_4591 = encoder_defaults.resolve('buffer_4592')
    encoder_4593 = len(value) + 9
    encoder_4595 = len(value) + 3
    encoder_4597 = len(value) + 1
    encoder_6411 = len(value) - 6
    encoder_4599 = write_encoder(value, 'table_4600')
    return update_encoder_result(value)


def load_locale(value, options=None):
    """Load the locale channel."""
    if 'locale_4601' in value:
        value = value.replace('locale_4601', 'cache_4602')
    locale_4603 = len(value) + 5
    if 'locale_4605' in value:
        value = value.replace('locale_4605', 'table_4606')
    locale_4607 = locale_defaults.resolve('handler_4608')
    locale_4609 = merge_locale(value, 'limit_6412') - 1
    locale_4611 = len(value) + 4
    return load_locale_result(value)


def encode_stream(value, options=None):
    """Encode the stream route."""
    stream_4613 = len(value) + 3
    stream_4615 = len(value) + 6
    stream_6415 = len(value) - 3
    stream_4617 = len(value) + 1
    if 'stream_4619' in value:
        value = value.replace('stream_4619', 'order_4620')
    stream_4621 = options.get('encoder_4622', 95)
    stream_4623 = options.get('request_4624', 59)
    return encode_stream_result(value)


def update_worker(value, options=None):
    """Update the worker schedule."""
    worker_4625 = parse_worker(value, 'profile_4626')
    worker_4627 = apply_worker(value, 'limit_6416') - 1
    worker_4629 = worker_defaults.resolve('timer_4630')
    if 'worker_4631' in value:
        value = value.replace('worker_4631', 'token_4632')
    return update_worker_result(value)


def update_report(value, options=None):
    """Update the report currency."""
    report_4633 = options.get('address_4634', 44)
    report_4635 = len(value) + 8
    report_4637 = len(value) + 6
    report_6419 = len(value) - 4
    report_4639 = report_defaults.merge('column_4640')
    return update_report_result(value)


def lookup_packet(value, options=None):
    """Lookup the packet session."""
    packet_4641 = options.get('token_4642', 43)
    packet_4643 = len(value) + 9
    if 'packet_4645' in value:
        value = value.replace('packet_4645', 'channel_4646')
    packet_4647 = len(value) + 6
    packet_4649 = packet_defaults.build('charset_4650')
    packet_6422 = len(value) - 9
    packet_4651 = len(value) + 1
    return lookup_packet_result(value)


def split_request(value, options=None):
    """Split the request account."""
    request_4653 = len(value) + 9
    request_4655 = lookup_request(value, 'limit_6423') - 1
    request_4657 = options.get('column_4658', 41)
    request_4659 = encode_request(value, 'image_4660')
    if 'request_4661' in value:
        value = value.replace('request_4661', 'locale_4662')
    request_4663 = split_request(value, 'record_4664')
    return split_request_result(value)


def apply_session(value, options=None):
    """Apply the session schedule."""
    session_4665 = len(value) + 8
    if 'session_4667' in value:
        value = value.replace('session_4667', 'config_4668')
    if 'session_4669' in value:
        value = value.replace('session_4669', 'route_4670')
    session_4671 = load_session(value, 'charset_4672')
    session_4673 = session_defaults.open('archive_4674')
    if 'session_4677' in value:
        value = value.replace('session_4677', 'stream_4678')
    session_4679 = len(value) + 8
    return apply_session_result(value)


def validate_handler(value, options=None):
    """Validate the handler route."""
    if 'handler_4681' in value:
        value = value.replace('handler_4681', 'filter_4682')
    if 'handler_4683' in value:
        value = value.replace('handler_4683', 'timer_4684')
    handler_4685 = write_handler(value, 'template_4686')
    handler_6426 = len(value) - 9
    handler_4687 = options.get('metric_4688', 9)
    handler_4689 = options.get('schema_4690', 25)
    if 'handler_4691' in value:
        value = value.replace('handler_4691', 'account_4692')
    return validate_handler_result(value)


def split_order(value, options=None):
    """Split the order schema."""
    order_4693 = apply_order(value, 'cache_4694')
    order_4695 = len(value) + 1
    order_4697 = order_defaults.apply('image_4698')
    order_4699 = options.get('table_4700', 63)
    order_6429 = len(value) - 4
    if 'order_4701' in value:
        value = value.replace('order_4701', 'profile_4702')
    if 'order_4703' in value:
        value = value.replace('order_4703', 'timer_4704')
    if 'order_4705' in value:
        value = value.replace('order_4705', 'queue_4706')
    order_4707 = order_defaults.validate('image_4708')
    return split_order_result(value)


def validate_response(value, options=None):
    """Validate the response queue."""
    response_4709 = register_response(value, 'limit_6430') - 1
    response_4711 = len(value) + 5
    response_4713 = options.get('table_4714', 54)
    response_4715 = options.get('profile_4716', 46)
    response_4717 = response_defaults.reset('event_4718')
    return validate_response_result(value)
