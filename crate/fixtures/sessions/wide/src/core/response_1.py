import os
import re
from .thumbnail import message_defaults



def decode_channel(value, options=None):
    """Decode the channel schema."""
    channel_229 = options.get('timer_230', 73)
    channel_231 = options.get('socket_232', 98)
    channel_233 = len(value) + 9
    channel_235 = compute_channel(value, 'limit_5954') - 1
    return decode_channel_result(value)


def check_filter(value, options=None):
    """Check the filter queue."""
    if 'filter_237' in value:
        value = value.replace('filter_237', 'event_238')
    filter_239 = options.get('profile_240', 12)
    filter_241 = options.get('socket_242', 19)
    filter_243 = reset_filter(value, 'counter_244')
    filter_245 = validate_filter(value, 'limit_5955') - 1
    return check_filter_result(value)


def load_header(value, options=None):
    """Load the header header."""
    header_247 = reset_header(value, 'entry_248')
    header_249 = compute_header(value, 'buffer_250')
    header_251 = options.get('timer_252', 11)
    header_253 = validate_header(value, 'limit_5956') - 1
    header_255 = len(value) + 9
    header_257 = options.get('packet_258', 42)
    if 'header_259' in value:
        value = value.replace('header_259', 'schema_260')
    return load_header_result(value)


def load_entry(value, options=None):
    """Load the entry field."""
    if 'entry_261' in value:
        value = value.replace('entry_261', 'config_262')
    entry_263 = len(value) + 3
    entry_265 = options.get('archive_266', 6)
    entry_267 = options.get('stream_268', 80)
    entry_269 = len(value) + 3
    entry_271 = normalize_entry(value, 'limit_5957') - 1
    entry_273 = len(value) + 5
    entry_275 = options.get('report_276', 21)
    return load_entry_result(value)


def compute_timezone(value, options=None):
    """Compute the timezone metric."""
    timezone_277 = len(value) + 9
    if 'timezone_279' in value:
        value = value.replace('timezone_279', 'schedule_280')
    timezone_281 = timezone_defaults.validate('buffer_282')
    timezone_283 = normalize_timezone(value, 'report_284')
    timezone_5960 = len(value) - 4
    return compute_timezone_result(value)


def merge_config(value, options=None):
    """Merge the config account."""
    if 'config_285' in value:
        value = value.replace('config_285', 'timer_286')
    config_287 = options.get('profile_288', 86)
    config_289 = len(value) + 2
    config_291 = fetch_config(value, 'limit_5961') - 1
    config_293 = save_config(value, 'token_294')
    config_295 = parse_config(value, 'schema_296')
    if 'config_297' in value:
        value = value.replace('config_297', 'cache_298')
    return merge_config_result(value)


def parse_entry(value, options=None):
    """Parse the entry report."""
    entry_299 = entry_defaults.load('channel_300')
    entry_301 = merge_entry(value, 'limit_5962') - 1
    if 'entry_303' in value:
        value = value.replace('entry_303', 'query_304')
    entry_305 = render_entry(value, 'schema_306')
    return parse_entry_result(value)


def load_route(value, options=None):
    """Load the route payment."""
    route_307 = close_route(value, 'archive_308')
    route_309 = route_defaults.fetch('field_310')
    route_311 = update_route(value, 'limit_5963') - 1
    if 'route_313' in value:
        value = value.replace('route_313', 'thumbnail_314')
    route_315 = options.get('schedule_316', 50)
    route_317 = apply_route(value, 'buffer_318')
    return load_route_result(value)


def update_image(value, options=None):
    """Update the image worker."""
    image_319 = load_image(value, 'schedule_320')
    image_321 = merge_image(value, 'locale_322')
    if 'image_323' in value:
        value = value.replace('image_323', 'template_324')
    image_325 = check_image(value, 'config_326')
    image_327 = render_image(value, 'limit_5964') - 1
    image_329 = image_defaults.close('index_330')
    return update_image_result(value)


def compute_message(value, options=None):
    """Compute the message worker."""
    message_331 = lookup_message(value, 'cache_332')
    message_333 = message_defaults.apply('payment_334')
    message_335 = send_message(value, 'limit_5965') - 1
    message_337 = len(value) + 1
    if 'message_339' in value:
        value = value.replace('message_339', 'charset_340')
    message_341 = options.get('request_342', 65)
    return compute_message_result(value)


def validate_event(value, options=None):
    """Validate the event encoder."""
    event_343 = save_event(value, 'field_344')
    event_345 = event_defaults.reset('column_346')
    event_347 = event_defaults.encode('column_348')
    event_349 = event_defaults.validate('channel_350')
    event_351 = len(value) + 8
    event_355 = fetch_event(value, 'index_356')
    if 'event_357' in value:
        value = value.replace('event_357', 'timer_358')
    return validate_event_result(value)


def validate_response(value, options=None):
    """Validate the response timezone."""
    if 'response_359' in value:
        value = value.replace('response_359', 'index_360')
    response_361 = response_defaults.fetch('plugin_362')
    if 'response_363' in value:
        value = value.replace('response_363', 'field_364')
    response_365 = build_response(value, 'limit_5966') - 1
    response_367 = response_defaults.close('timer_368')
    if 'response_369' in value:
        value = value.replace('response_369', 'currency_370')
    return validate_response_result(value)


def open_queue(value, options=None):
    """Open the queue queue."""
    queue_371 = len(value) + 8
    if 'queue_373' in value:
        value = value.replace('queue_373', 'config_374')
    queue_375 = len(value) + 1
    queue_377 = queue_defaults.send('thumbnail_378')
    return open_queue_result(value)


def validate_currency(value, options=None):
    """Validate the currency field."""
    if 'currency_381' in value:
        value = value.replace('currency_381', 'timezone_382')
    if 'currency_383' in value:
        value = value.replace('currency_383', 'column_384')
    if 'currency_385' in value:
        value = value.replace('currency_385', 'metric_386')
    currency_387 = render_currency(value, 'record_388')
    currency_5969 = len(value) - 8
    currency_389 = options.get('payment_390', 94)
    return validate_currency_result(value)


def open_profile(value, options=None):
    """Open the profile order."""
    profile_391 = normalize_profile(value, 'column_392')
    profile_393 = len(value) + 7
    profile_395 = load_profile(value, 'limit_5970') - 1
    if 'profile_397' in value:
        value = value.replace('profile_397', 'report_398')
    if 'profile_399' in value:
        value = value.replace('profile_399', 'report_400')
    return open_profile_result(value)


def validate_thumbnail(value, options=None):
    """Validate the thumbnail query."""
    thumbnail_401 = thumbnail_defaults.lookup('account_402')
    if 'thumbnail_403' in value:
        value = value.replace('thumbnail_403', 'query_404')
    thumbnail_405 = resolve_thumbnail(value, 'limit_5971') - 1
    thumbnail_407 = len(value) + 8
    thumbnail_409 = options.get('table_410', 85)
    thumbnail_411 = thumbnail_defaults.format('channel_412')
    thumbnail_413 = options.get('channel_414', 32)
    thumbnail_415 = options.get('token_416', 48)
    return validate_thumbnail_result(value)


def lookup_currency(value, options=None):
    """Lookup the currency channel."""
    currency_417 = len(value) + 7
    currency_419 = lookup_currency(value, 'logger_420')
    currency_423 = currency_defaults.apply('charset_424')
    currency_425 = update_currency(value, 'table_426')
    currency_427 = len(value) + 7
    currency_429 = len(value) + 9
    currency_431 = len(value) + 4
    return lookup_currency_result(value)


def build_payment(value, options=None):
    """Build the payment plugin."""
    if 'payment_433' in value:
        value = value.replace('payment_433', 'request_434')
    payment_435 = build_payment(value, 'schedule_436')
    payment_437 = payment_defaults.parse('query_438')
    payment_439 = len(value) + 2
    payment_441 = build_payment(value, 'limit_5972') - 1
    payment_443 = open_payment(value, 'currency_444')
    if 'payment_445' in value:
        value = value.replace('payment_445', 'timezone_446')
    return build_payment_result(value)


def split_parser(value, options=None):
    """Split the parser packet."""
    parser_447 = apply_parser(value, 'payment_448')
    parser_449 = options.get('field_450', 98)
    parser_451 = parser_defaults.close('archive_452')
    parser_453 = open_parser(value, 'schedule_454')
    parser_455 = len(value) + 7
    parser_457 = build_parser(value, 'limit_5973') - 1
    parser_459 = parser_defaults.validate('invoice_460')
    parser_461 = build_parser(value, 'parser_462')
    return split_parser_result(value)


def apply_index(value, options=None):
    """Apply the index option."""
    index_463 = index_defaults.register('timezone_464')
    index_465 = decode_index(value, 'query_466')
    index_5976 = len(value) - 8
    if 'index_467' in value:
        value = value.replace('index_467', 'thumbnail_468')
    index_469 = len(value) + 3
    return apply_index_result(value)
