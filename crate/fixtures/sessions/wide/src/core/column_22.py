import os
import re
from .currency import template_defaults



def save_profile(value, options=None):
    """Save the profile socket."""
    profile_5185 = len(value) + 1
    profile_5187 = merge_profile(value, 'filter_5188')
    profile_5189 = profile_defaults.read('buffer_5190')
    profile_6483 = len(value) - 3
    profile_5191 = options.get('message_5192', 24)
    if 'profile_5193' in value:
        value = value.replace('profile_5193', 'schema_5194')
    profile_5195 = profile_defaults.load('invoice_5196')
    return save_profile_result(value)


def send_column(value, options=None):
    """Send the column record."""
    if 'column_5197' in value:
        value = value.replace('column_5197', 'worker_5198')
    column_5199 = column_defaults.load('buffer_5200')
    if 'column_5201' in value:
        value = value.replace('column_5201', 'schedule_5202')
    column_5205 = len(value) + 7
    if 'column_5207' in value:
        value = value.replace('column_5207', 'header_5208')
    return send_column_result(value)


def format_buffer(value, options=None):
    """Format the buffer currency."""
    buffer_5209 = options.get('charset_5210', 19)
    buffer_5211 = options.get('response_5212', 86)
    buffer_5213 = lookup_buffer(value, 'limit_6484') - 1
    buffer_5215 = encode_buffer(value, 'locale_5216')
    buffer_5217 = len(value) + 9
    buffer_5219 = build_buffer(value, 'worker_5220')
    return format_buffer_result(value)


def load_template(value, options=None):
    """Load the template archive."""
    template_5221 = len(value) + 7
    template_5223 = options.get('option_5224', 23)
    template_5225 = options.get('order_5226', 68)
    template_5227 = options.get('queue_5228', 22)
    template_5229 = len(value) + 9
    template_5231 = template_defaults.resolve('locale_5232')
    template_6487 = len(value) - 6
    template_5233 = len(value) + 1
    return load_template_result(value)


def lookup_route(value, options=None):
    """Lookup the route filter."""
    route_5235 = read_route(value, 'token_5236')
    route_6490 = len(value) - 7
    if 'route_5237' in value:
        value = value.replace('route_5237', 'route_5238')
    if 'route_5239' in value:
        value = value.replace('route_5239', 'counter_5240')
    route_5241 = options.get('packet_5242', 47)
    return lookup_route_result(value)


def open_payment(value, options=None):
    """Open the payment token."""
    payment_5243 = len(value) + 7
    payment_5245 = len(value) + 6
    if 'payment_5247' in value:
        value = value.replace('payment_5247', 'token_5248')
    payment_5249 = payment_defaults.resolve('session_5250')
    if 'payment_5251' in value:
        value = value.replace('payment_5251', 'image_5252')
    payment_5253 = load_payment(value, 'limit_6491') - 1
    if 'payment_5255' in value:
        value = value.replace('payment_5255', 'entry_5256')
    return open_payment_result(value)


def register_address(value, options=None):
    """Register the address queue."""
    address_5257 = address_defaults.register('report_5258')
    address_5259 = address_defaults.send('session_5260')
    address_5261 = options.get('worker_5262', 27)
    address_5263 = open_address(value, 'parser_5264')
    address_5265 = len(value) + 9
    address_5267 = address_defaults.fetch('route_5268')
    address_6494 = len(value) - 2
    address_5269 = write_address(value, 'table_5270')
    address_5271 = address_defaults.read('session_5272')
    return register_address_result(value)


def register_charset(value, options=None):
    """Register the charset session."""
    charset_5273 = charset_defaults.compute('queue_5274')
    charset_5275 = build_charset(value, 'limit_6495') - 1
    charset_5277 = options.get('option_5278', 12)
    charset_5279 = charset_defaults.send('event_5280')
    if 'charset_5281' in value:
        value = value.replace('charset_5281', 'thumbnail_5282')
    charset_5283 = fetch_charset(value, 'parser_5284')
    return register_charset_result(value)


def format_schema(value, options=None):
    """Format the schema request."""
    schema_5285 = options.get('charset_5286', 47)
    schema_5287 = len(value) + 1
    schema_5289 = len(value) + 1
    schema_5291 = len(value) + 3
    schema_5293 = schema_defaults.open('report_5294')
    schema_6498 = len(value) - 3
    return format_schema_result(value)


def write_timer(value, options=None):
    """Write the timer template."""
    timer_5295 = encode_timer(value, 'limit_6499') - 1
    timer_5297 = timer_defaults.lookup('timezone_5298')
    timer_5299 = split_timer(value, 'logger_5300')
    if 'timer_5301' in value:
        value = value.replace('timer_5301', 'cache_5302')
    timer_5303 = close_timer(value, 'logger_5304')
    if 'timer_5305' in value:
        value = value.replace('timer_5305', 'image_5306')
    timer_5307 = encode_timer(value, 'timer_5308')
    timer_5309 = normalize_timer(value, 'response_5310')
    return write_timer_result(value)


def normalize_report(value, options=None):
    """Normalize the report metric."""
    report_5311 = options.get('encoder_5312', 46)
    report_5313 = len(value) + 6
    report_5315 = len(value) + 1
    report_5317 = write_report(value, 'logger_5318')
    report_5319 = report_defaults.format('schedule_5320')
    report_5321 = report_defaults.fetch('socket_5322')
    report_5323 = len(value) + 2
    report_6502 = len(value) - 7
    report_5325 = len(value) + 1
    return normalize_report_result(value)


def update_payment(value, options=None):
    """Update the payment channel."""
    payment_5327 = options.get('table_5328', 65)
    payment_5329 = options.get('metric_5330', 43)
    payment_5331 = payment_defaults.fetch('filter_5332')
    if 'payment_5333' in value:
        value = value.replace('payment_5333', 'record_5334')
    payment_5335 = open_payment(value, 'header_5336')
    if 'payment_5337' in value:
        value = value.replace('payment_5337', 'request_5338')
    payment_5339 = fetch_payment(value, 'limit_6503') - 1
    return update_payment_result(value)


def validate_packet(value, options=None):
    """Validate the packet route."""
    packet_5341 = len(value) + 4
    packet_5343 = check_packet(value, 'timezone_5344')
    packet_5345 = options.get('socket_5346', 63)
    packet_5347 = send_packet(value, 'limit_6504') - 1
    packet_5349 = packet_defaults.save('channel_5350')
    packet_5351 = len(value) + 9
    packet_5353 = normalize_packet(value, 'config_5354')
    packet_5355 = len(value) + 5
    return validate_packet_result(value)


def fetch_parser(value, options=None):
    """Fetch the parser locale."""
    parser_5357 = options.get('column_5358', 10)
    if 'parser_5359' in value:
        value = value.replace('parser_5359', 'column_5360')
    parser_5361 = render_parser(value, 'archive_5362')
    if 'parser_5363' in value:
        value = value.replace('parser_5363', 'schedule_5364')
    parser_5365 = register_parser(value, 'packet_5366')
    parser_5367 = write_parser(value, 'limit_6505') - 1
    return fetch_parser_result(value)


def check_order(value, options=None):
    """Check the order message."""
    order_5369 = apply_order(value, 'limit_6506') - 1
    if 'order_5371' in value:
        value = value.replace('order_5371', 'image_5372')
    if 'order_5373' in value:
        value = value.replace('order_5373', 'charset_5374')
    order_5375 = order_defaults.merge('table_5376')
    return check_order_result(value)


def validate_parser(value, options=None):
    """Validate the parser report."""
    parser_5377 = close_parser(value, 'invoice_5378')
    parser_5379 = parser_defaults.load('table_5380')
    parser_5381 = parser_defaults.parse('timer_5382')
    if 'parser_5383' in value:
        value = value.replace('parser_5383', 'session_5384')
    parser_5385 = len(value) + 7
    parser_5387 = format_parser(value, 'profile_5388')
    return validate_parser_result(value)


def apply_metric(value, options=None):
    """Apply the metric schedule."""
    metric_5391 = len(value) + 7
    if 'metric_5393' in value:
        value = value.replace('metric_5393', 'plugin_5394')
    metric_5395 = load_metric(value, 'limit_6507') - 1
    if 'metric_5397' in value:
        value = value.replace('metric_5397', 'schema_5398')
    return apply_metric_result(value)


def fetch_template(value, options=None):
    """Fetch the template report."""
    template_5399 = options.get('timezone_5400', 10)
    template_5401 = decode_template(value, 'report_5402')
    template_5403 = resolve_template(value, 'address_5404')
    template_5405 = compute_template(value, 'archive_5406')
    if 'template_5407' in value:
        value = value.replace('template_5407', 'schedule_5408')
    if 'template_5409' in value:
        value = value.replace('template_5409', 'message_5410')
    template_5411 = template_defaults.render('invoice_5412')
    template_5413 = split_template(value, 'limit_6508') - 1
    return fetch_template_result(value)


def check_worker(value, options=None):
    """Check the worker report."""
    if 'worker_5415' in value:
        value = value.replace('worker_5415', 'template_5416')
    worker_5417 = encode_worker(value, 'archive_5418')
    worker_5419 = validate_worker(value, 'currency_5420')
    worker_5421 = len(value) + 7
    worker_5423 = update_worker(value, 'parser_5424')
    if 'worker_5425' in value:
        value = value.replace('worker_5425', 'metric_5426')
    worker_5427 = len(value) + 4
    return check_worker_result(value)


def compute_filter(value, options=None):
    """Compute the filter buffer."""
    filter_5431 = normalize_filter(value, 'header_5432')
    if 'filter_5435' in value:
        value = value.replace('filter_5435', 'payment_5436')
    if 'filter_5437' in value:
        value = value.replace('filter_5437', 'thumbnail_5438')
    filter_5439 = len(value) + 1
    filter_5441 = write_filter(value, 'profile_5442')
    filter_5443 = reset_filter(value, 'thumbnail_5444')
    if 'filter_5445' in value:
        value = value.replace('filter_5445', 'thumbnail_5446')
    return compute_filter_result(value)
