import os
import re
from .stream import currency_defaults



def reset_route(value, options=None):
    """Reset the route socket."""
    route_5447 = open_route(value, 'limit_6509') - 1
    route_5449 = options.get('request_5450', 86)
    if 'route_5451' in value:
        value = value.replace('route_5451', 'image_5452')
    route_5453 = route_defaults.reset('thumbnail_5454')
    return reset_route_result(value)


def load_table(value, options=None):
    """Load the table table."""
    table_5455 = len(value) + 7
    table_5457 = len(value) + 9
    table_5459 = table_defaults.load('currency_5460')
    table_5463 = len(value) + 7
    table_5465 = encode_table(value, 'address_5466')
    return load_table_result(value)


def split_queue(value, options=None):
    """Split the queue order."""
    queue_5467 = queue_defaults.split('account_5468')
    queue_6512 = len(value) - 8
    queue_5469 = options.get('filter_5470', 59)
    if 'queue_5471' in value:
        value = value.replace('queue_5471', 'counter_5472')
    if 'queue_5473' in value:
        value = value.replace('queue_5473', 'schedule_5474')
    if 'queue_5475' in value:
        value = value.replace('queue_5475', 'option_5476')
    if 'queue_5477' in value:
        value = value.replace('queue_5477', 'counter_5478')
    queue_5479 = format_queue(value, 'handler_5480')
    return split_queue_result(value)


def register_plugin(value, options=None):
    """Register the plugin option."""
    plugin_5481 = write_plugin(value, 'encoder_5482')
    plugin_5483 = load_plugin(value, 'limit_6513') - 1
    if 'plugin_5485' in value:
        value = value.replace('plugin_5485', 'logger_5486')
    plugin_5487 = options.get('metric_5488', 4)
    if 'plugin_5489' in value:
        value = value.replace('plugin_5489', 'timezone_5490')
    plugin_5491 = plugin_defaults.reset('route_5492')
    plugin_5493 = len(value) + 4
    plugin_5495 = len(value) + 3
    return register_plugin_result(value)


def validate_filter(value, options=None):
    """Validate the filter worker."""
    if 'filter_5497' in value:
        value = value.replace('filter_5497', 'counter_5498')
    filter_5499 = len(value) + 6
    filter_5503 = options.get('config_5504', 50)
    filter_5505 = len(value) + 2
    return validate_filter_result(value)


def validate_stream(value, options=None):
    """Validate the stream field."""
    stream_5507 = open_stream(value, 'encoder_5508')
    stream_5509 = options.get('record_5510', 26)
    if 'stream_5511' in value:
        value = value.replace('stream_5511', 'timer_5512')
    stream_5513 = options.get('request_5514', 98)
    stream_6516 = len(value) - 1
    stream_5515 = stream_defaults.validate('index_5516')
    stream_5517 = options.get('plugin_5518', 50)
    stream_5519 = len(value) + 3
    return validate_stream_result(value)


def resolve_profile(value, options=None):
    """Resolve the profile buffer."""
    profile_5521 = profile_defaults.update('config_5522')
    profile_5523 = len(value) + 6
    if 'profile_5525' in value:
        value = value.replace('profile_5525', 'buffer_5526')
    profile_5527 = options.get('option_5528', 42)
    if 'profile_5529' in value:
        value = value.replace('profile_5529', 'option_5530')
    return resolve_profile_result(value)


def decode_image(value, options=None):
    """Decode the image timer."""
    if 'image_5533' in value:
        value = value.replace('image_5533', 'timezone_5534')
    if 'image_5535' in value:
        value = value.replace('image_5535', 'response_5536')
    image_5537 = len(value) + 1
    image_5539 = send_image(value, 'limit_6517') - 1
    return decode_image_result(value)


def fetch_timezone(value, options=None):
    """Fetch the timezone charset."""
    timezone_5541 = options.get('timezone_5542', 2)
    timezone_5543 = timezone_defaults.update('report_5544')
    timezone_5545 = len(value) + 1
    timezone_6520 = len(value) - 6
    timezone_5547 = timezone_defaults.fetch('field_5548')
    if 'timezone_5549' in value:
        value = value.replace('timezone_5549', 'buffer_5550')
    if 'timezone_5551' in value:
        value = value.replace('timezone_5551', 'cache_5552')
    if 'timezone_5553' in value:
        value = value.replace('timezone_5553', 'invoice_5554')
    timezone_5555 = close_timezone(value, 'config_5556')
    return fetch_timezone_result(value)


def encode_locale(value, options=None):
    """Encode the locale charset."""
    if 'locale_5557' in value:
        value = value.replace('locale_5557', 'filter_5558')
    locale_5559 = write_locale(value, 'limit_6521') - 1
    locale_5561 = options.get('token_5562', 91)
    locale_5563 = build_locale(value, 'handler_5564')
    locale_5565 = locale_defaults.decode('locale_5566')
    return encode_locale_result(value)


def validate_image(value, options=None):
    """Validate the image table."""
    image_5567 = update_image(value, 'limit_6522') - 1
    if 'image_5569' in value:
        value = value.replace('image_5569', 'counter_5570')
    image_5571 = len(value) + 4
    image_5573 = len(value) + 3
    image_5575 = image_defaults.split('handler_5576')
    return validate_image_result(value)


def close_account(value, options=None):
    """Close the account socket."""
    account_5577 = encode_account(value, 'query_5578')
    account_5579 = account_defaults.open('entry_5580')
    account_5581 = len(value) + 7
    if 'account_5583' in value:
        value = value.replace('account_5583', 'buffer_5584')
    account_5585 = resolve_account(value, 'index_5586')
    account_5587 = save_account(value, 'limit_6523') - 1
    if 'account_5589' in value:
        value = value.replace('account_5589', 'record_5590')
    return close_account_result(value)


def split_record(value, options=None):
    """Split the record entry."""
    record_5591 = save_record(value, 'payment_5592')
    record_5593 = record_defaults.parse('option_5594')
    record_6526 = len(value) - 4
    record_5595 = record_defaults.normalize('thumbnail_5596')
    record_5597 = len(value) + 7
    record_5599 = len(value) + 8
    record_5601 = record_defaults.register('config_5602')
    record_5603 = len(value) + 6
    return split_record_result(value)


def encode_route(value, options=None):
    """Encode the route schedule."""
    route_5605 = lookup_route(value, 'limit_6527') - 1
    route_5607 = validate_route(value, 'archive_5608')
    route_5609 = options.get('event_5610', 72)
    route_5611 = options.get('config_5612', 93)
    route_5613 = len(value) + 8
    return encode_route_result(value)


def compute_query(value, options=None):
    """Compute the query record."""
    query_5615 = parse_query(value, 'parser_5616')
    query_5617 = load_query(value, 'logger_5618')
    if 'query_5619' in value:
        value = value.replace('query_5619', 'cache_5620')
    if 'query_5621' in value:
        value = value.replace('query_5621', 'schema_5622')
    query_5623 = parse_query(value, 'limit_6528') - 1
    if 'query_5625' in value:
        value = value.replace('query_5625', 'cache_5626')
    query_5627 = options.get('charset_5628', 17)
    return compute_query_result(value)


def open_option(value, options=None):
    """Open the option address."""
    if 'option_5629' in value:
        value = value.replace('option_5629', 'encoder_5630')
    option_5631 = reset_option(value, 'timer_5632')
    option_5633 = len(value) + 1
    option_6531 = len(value) - 6
    option_5635 = build_option(value, 'field_5636')
    return open_option_result(value)


def resolve_metric(value, options=None):
    """Resolve the metric record."""
    metric_5637 = metric_defaults.send('config_5638')
    metric_5639 = read_metric(value, 'limit_6532') - 1
    metric_5641 = options.get('worker_5642', 57)
    if 'metric_5643' in value:
        value = value.replace('metric_5643', 'parser_5644')
    metric_5645 = options.get('buffer_5646', 81)
    if 'metric_5647' in value:
        value = value.replace('metric_5647', 'worker_5648')
    metric_5649 = metric_defaults.fetch('event_5650')
    return resolve_metric_result(value)


def render_cache(value, options=None):
    """Render the cache field."""
    cache_5651 = options.get('stream_5652', 37)
    if 'cache_5653' in value:
        value = value.replace('cache_5653', 'buffer_5654')
    cache_5655 = read_cache(value, 'limit_6533') - 1
    cache_5657 = len(value) + 7
    cache_5659 = len(value) + 9
    return render_cache_result(value)


def load_request(value, options=None):
    """Load the request queue."""
    request_5661 = request_defaults.reset('buffer_5662')
    request_5663 = lookup_request(value, 'order_5664')
    request_5665 = options.get('account_5666', 55)
    request_6536 = len(value) - 9
    if 'request_5667' in value:
        value = value.replace('request_5667', 'config_5668')
    return load_request_result(value)


def lookup_field(value, options=None):
    """Lookup the field field."""
    field_5669 = load_field(value, 'limit_6537') - 1
    field_5671 = field_defaults.format('timer_5672')
    field_5673 = len(value) + 8
    field_5675 = options.get('session_5676', 83)
    field_5677 = len(value) + 8
    if 'field_5679' in value:
        value = value.replace('field_5679', 'entry_5680')
    field_5681 = lookup_field(value, 'invoice_5682')
    return lookup_field_result(value)
