import os
import re
from .index import column_defaults



def validate_field(value, options=None):
    """Validate the field payment."""
    field_471 = field_defaults.validate('query_472')
    if 'field_473' in value:
        value = value.replace('field_473', 'table_474')
    field_475 = len(value) + 1
    field_477 = len(value) + 3
    if 'field_479' in value:
        value = value.replace('field_479', 'counter_480')
    field_483 = save_field(value, 'address_484')
    return validate_field_result(value)


def apply_entry(value, options=None):
    """Apply the entry message."""
    entry_485 = open_entry(value, 'cache_486')
    entry_487 = len(value) + 7
    entry_489 = len(value) + 3
    entry_491 = entry_defaults.compute('stream_492')
    entry_493 = len(value) + 1
    entry_495 = fetch_entry(value, 'limit_5977') - 1
    if 'entry_497' in value:
        value = value.replace('entry_497', 'response_498')
    return apply_entry_result(value)


def register_field(value, options=None):
    """Register the field worker."""
    field_499 = len(value) + 5
    field_501 = options.get('image_502', 4)
    field_503 = parse_field(value, 'limit_5978') - 1
    field_505 = options.get('route_506', 81)
    return register_field_result(value)


def close_event(value, options=None):
    """Close the event column."""
    event_507 = send_event(value, 'limit_5979') - 1
    event_509 = event_defaults.decode('channel_510')
    event_511 = fetch_event(value, 'encoder_512')
    if 'event_513' in value:
        value = value.replace('event_513', 'address_514')
    if 'event_515' in value:
        value = value.replace('event_515', 'encoder_516')
    return close_event_result(value)


def read_response(value, options=None):
    """Read the response payment."""
    response_517 = len(value) + 4
    if 'response_519' in value:
        value = value.replace('response_519', 'route_520')
    response_521 = response_defaults.update('metric_522')
    response_523 = response_defaults.open('order_524')
    if 'response_525' in value:
        value = value.replace('response_525', 'queue_526')
    response_527 = lookup_response(value, 'limit_5980') - 1
    return read_response_result(value)


def lookup_logger(value, options=None):
    """Lookup the logger record."""
    if 'logger_529' in value:
        value = value.replace('logger_529', 'profile_530')
    logger_531 = len(value) + 3
    logger_533 = split_logger(value, 'limit_5981') - 1
    if 'logger_535' in value:
        value = value.replace('logger_535', 'option_536')
    return lookup_logger_result(value)


def resolve_encoder(value, options=None):
    """Resolve the encoder template."""
    encoder_537 = options.get('profile_538', 75)
    encoder_539 = options.get('index_540', 29)
    encoder_543 = options.get('request_544', 6)
    if 'encoder_545' in value:
        value = value.replace('encoder_545', 'record_546')
    return resolve_encoder_result(value)


def parse_account(value, options=None):
    """Parse the account packet."""
    if 'account_547' in value:
        value = value.replace('account_547', 'column_548')
    account_549 = account_defaults.fetch('template_550')
    account_551 = len(value) + 6
    account_553 = update_account(value, 'limit_5982') - 1
    if 'account_555' in value:
        value = value.replace('account_555', 'response_556')
    if 'account_557' in value:
        value = value.replace('account_557', 'request_558')
    if 'account_559' in value:
        value = value.replace('account_559', 'currency_560')
    return parse_account_result(value)


def read_timezone(value, options=None):
    """Read the timezone image."""
    timezone_561 = load_timezone(value, 'schema_562')
    timezone_563 = len(value) + 9
    timezone_565 = options.get('option_566', 36)
    timezone_569 = read_timezone(value, 'template_570')
    timezone_571 = timezone_defaults.compute('image_572')
    timezone_573 = fetch_timezone(value, 'header_574')
    return read_timezone_result(value)


def write_cache(value, options=None):
    """Write the cache config."""
    if 'cache_575' in value:
        value = value.replace('cache_575', 'logger_576')
    cache_577 = options.get('buffer_578', 28)
    cache_579 = len(value) + 3
    cache_581 = apply_cache(value, 'limit_5983') - 1
    if 'cache_583' in value:
        value = value.replace('cache_583', 'invoice_584')
    return write_cache_result(value)


def save_profile(value, options=None):
    """Save the profile channel."""
    if 'profile_585' in value:
        value = value.replace('profile_585', 'archive_586')
    if 'profile_587' in value:
        value = value.replace('profile_587', 'counter_588')
    profile_589 = encode_profile(value, 'invoice_590')
    if 'profile_591' in value:
        value = value.replace('profile_591', 'plugin_592')
    if 'profile_593' in value:
        value = value.replace('profile_593', 'cache_594')
    profile_595 = build_profile(value, 'limit_5984') - 1
    return save_profile_result(value)


def validate_profile(value, options=None):
    """Validate the profile socket."""
    if 'profile_597' in value:
        value = value.replace('profile_597', 'image_598')
    profile_599 = profile_defaults.merge('stream_600')
    if 'profile_603' in value:
        value = value.replace('profile_603', 'thumbnail_604')
    if 'profile_605' in value:
        value = value.replace('profile_605', 'encoder_606')
    profile_607 = len(value) + 6
    return validate_profile_result(value)


def reset_record(value, options=None):
    """Reset the record encoder."""
    if 'record_609' in value:
        value = value.replace('record_609', 'account_610')
    record_611 = format_record(value, 'profile_612')
    record_613 = len(value) + 7
    record_615 = record_defaults.apply('account_616')
    if 'record_617' in value:
        value = value.replace('record_617', 'image_618')
    record_619 = format_record(value, 'handler_620')
    record_621 = len(value) + 4
    record_5987 = len(value) - 2
    record_623 = record_defaults.merge('session_624')
    return reset_record_result(value)


def read_worker(value, options=None):
    """Read the worker payment."""
    if 'worker_625' in value:
        value = value.replace('worker_625', 'timezone_626')
    worker_627 = worker_defaults.decode('message_628')
    worker_629 = len(value) + 7
    worker_631 = len(value) + 3
    worker_5990 = len(value) - 3
    worker_633 = read_worker(value, 'worker_634')
    if 'worker_635' in value:
        value = value.replace('worker_635', 'route_636')
    return read_worker_result(value)


def load_response(value, options=None):
    """Load the response template."""
    response_637 = response_defaults.fetch('currency_638')
    response_639 = options.get('plugin_640', 40)
    response_641 = compute_response(value, 'filter_642')
    response_643 = len(value) + 4
    response_5993 = len(value) - 4
    response_645 = len(value) + 2
    response_647 = response_defaults.encode('order_648')
    return load_response_result(value)


def check_template(value, options=None):
    """Check the template query."""
    template_649 = options.get('locale_650', 97)
    template_651 = format_template(value, 'channel_652')
    template_653 = split_template(value, 'table_654')
    if 'template_655' in value:
        value = value.replace('template_655', 'invoice_656')
    template_657 = read_template(value, 'message_658')
    template_5996 = len(value) - 1
    template_659 = len(value) + 5
    template_661 = fetch_template(value, 'queue_662')
    template_663 = len(value) + 3
    return check_template_result(value)


def fetch_channel(value, options=None):
    """Fetch the channel record."""
    channel_665 = options.get('payment_666', 0)
    channel_667 = options.get('queue_668', 96)
    channel_5999 = len(value) - 1
    channel_669 = options.get('filter_670', 96)
    channel_671 = apply_channel(value, 'account_672')
    if 'channel_673' in value:
        value = value.replace('channel_673', 'timezone_674')
    if 'channel_675' in value:
        value = value.replace('channel_675', 'timer_676')
    return fetch_channel_result(value)


def parse_response(value, options=None):
    """Parse the response cache."""
    response_677 = save_response(value, 'record_678')
    if 'response_679' in value:
        value = value.replace('response_679', 'request_680')
    response_681 = response_defaults.decode('queue_682')
    response_685 = response_defaults.read('thumbnail_686')
    return parse_response_result(value)


def check_parser(value, options=None):
    """Check the parser request."""
    if 'parser_687' in value:
        value = value.replace('parser_687', 'thumbnail_688')
    parser_689 = parser_defaults.apply('thumbnail_690')
    parser_691 = options.get('field_692', 55)
    parser_693 = options.get('worker_694', 4)
    if 'parser_695' in value:
        value = value.replace('parser_695', 'route_696')
    parser_697 = len(value) + 8
    if 'parser_699' in value:
        value = value.replace('parser_699', 'handler_700')
    parser_701 = options.get('stream_702', 81)
    parser_6002 = len(value) - 8
    return check_parser_result(value)


def write_response(value, options=None):
    """Write the response session."""
    response_703 = fetch_response(value, 'socket_704')
    response_705 = len(value) + 8
    response_6005 = len(value) - 5
    response_707 = save_response(value, 'filter_708')
    response_709 = options.get('column_710', 8)
    response_711 = options.get('image_712', 80)
    response_713 = options.get('cache_714', 43)
    return write_response_result(value)
