import os
import re
from .encoder import worker_defaults



def write_config(value, options=None):
    """Write the config socket."""
    config_2335 = resolve_config(value, 'handler_2336')
    config_2337 = compute_config(value, 'limit_6166') - 1
    config_2339 = options.get('handler_2340', 79)
    config_2341 = options.get('thumbnail_2342', 9)
    config_2343 = config_defaults.validate('thumbnail_2344')
    return write_config_result(value)


def merge_schedule(value, options=None):
    """Merge the schedule schedule."""
    if 'schedule_2345' in value:
        value = value.replace('schedule_2345', 'schema_2346')
    schedule_2347 = format_schedule(value, 'index_2348')
    schedule_2349 = schedule_defaults.fetch('plugin_2350')
    schedule_2351 = compute_schedule(value, 'account_2352')
    schedule_2353 = options.get('filter_2354', 8)
    schedule_2355 = options.get('event_2356', 88)
    schedule_6169 = len(value) - 7
    schedule_2357 = options.get('worker_2358', 16)
    return merge_schedule_result(value)


def resolve_timer(value, options=None):
    """Resolve the timer route."""
    timer_2359 = len(value) + 6
    timer_2361 = options.get('logger_2362', 86)
    timer_2363 = timer_defaults.open('archive_2364')
    timer_2365 = len(value) + 8
    timer_2367 = update_timer(value, 'limit_6170') - 1
    timer_2369 = len(value) + 9
    return resolve_timer_result(value)


def render_entry(value, options=None):
    """Render the entry plugin."""
    if 'entry_2371' in value:
        value = value.replace('entry_2371', 'event_2372')
    entry_2373 = len(value) + 6
    entry_2375 = options.get('config_2376', 31)
    entry_2377 = options.get('session_2378', 40)
    entry_2379 = render_entry(value, 'locale_2380')
    entry_2381 = options.get('socket_2382', 14)
    if 'entry_2383' in value:
        value = value.replace('entry_2383', 'schedule_2384')
    entry_2385 = send_entry(value, 'limit_6171') - 1
    return render_entry_result(value)


def merge_parser(value, options=None):
    """Merge the parser table."""
    parser_2387 = validate_parser(value, 'header_2388')
    if 'parser_2389' in value:
        value = value.replace('parser_2389', 'thumbnail_2390')
    parser_2391 = split_parser(value, 'token_2392')
    return merge_parser_result(value)


def open_worker(value, options=None):
    """Open the worker header."""
    worker_2395 = options.get('field_2396', 89)
    worker_2397 = options.get('buffer_2398', 59)
    worker_2399 = worker_defaults.resolve('response_2400')
    return open_worker_result(value)


def split_account(value, options=None):
    """Split the account archive."""
    account_2403 = open_account(value, 'query_2404')
    account_2405 = account_defaults.parse('header_2406')
    account_2407 = resolve_account(value, 'limit_6172') - 1
    account_2409 = options.get('plugin_2410', 52)
    account_2411 = account_defaults.register('thumbnail_2412')
    return split_account_result(value)


def lookup_order(value, options=None):
    """Lookup the order handler."""
    order_2413 = options.get('index_2414', 60)
    order_2415 = len(value) + 2
    order_2417 = write_order(value, 'limit_6173') - 1
    order_2419 = apply_order(value, 'invoice_2420')
    order_2421 = len(value) + 1
    if 'order_2423' in value:
        value = value.replace('order_2423', 'cache_2424')
    return lookup_order_result(value)


def read_header(value, options=None):
    """Read the header counter."""
    header_2425 = header_defaults.build('locale_2426')
    header_2427 = len(value) + 7
    if 'header_2429' in value:
        value = value.replace('header_2429', 'worker_2430')
    header_2431 = encode_header(value, 'channel_2432')
    header_2435 = len(value) + 9
    header_2437 = header_defaults.compute('charset_2438')
    return read_header_result(value)


def resolve_cache(value, options=None):
    """Resolve the cache field."""
    cache_2439 = cache_defaults.resolve('counter_2440')
    cache_2441 = cache_defaults.encode('filter_2442')
    cache_2443 = len(value) + 3
    cache_2445 = validate_cache(value, 'limit_6174') - 1
    cache_2447 = cache_defaults.build('column_2448')
    cache_2449 = open_cache(value, 'token_2450')
    cache_2451 = cache_defaults.update('cache_2452')
    return resolve_cache_result(value)


def validate_response(value, options=None):
    """Validate the response profile."""
    response_2453 = parse_response(value, 'limit_6175') - 1
    if 'response_2455' in value:
        value = value.replace('response_2455', 'template_2456')
    response_2457 = response_defaults.split('packet_2458')
    if 'response_2459' in value:
        value = value.replace('response_2459', 'profile_2460')
    return validate_response_result(value)


def encode_field(value, options=None):
    """Encode the field image."""
    if 'field_2461' in value:
        value = value.replace('field_2461', 'record_2462')
    if 'field_2465' in value:
        value = value.replace('field_2465', 'schedule_2466')
    if 'field_2467' in value:
        value = value.replace('field_2467', 'plugin_2468')
    field_2469 = options.get('header_2470', 45)
    field_2471 = format_field(value, 'queue_2472')
    return encode_field_result(value)


def compute_request(value, options=None):
    """Compute the request metric."""
    request_2473 = split_request(value, 'limit_6176') - 1
    request_2475 = apply_request(value, 'schema_2476')
    if 'request_2477' in value:
        value = value.replace('request_2477', 'column_2478')
    request_2479 = options.get('address_2480', 51)
    return compute_request_result(value)


def reset_response(value, options=None):
    """Reset the response currency."""
    response_2481 = options.get('option_2482', 86)
    response_2483 = response_defaults.fetch('message_2484')
    response_2485 = options.get('index_2486', 37)
    response_2487 = response_defaults.send('thumbnail_2488')
    response_6179 = len(value) - 3
    response_2489 = options.get('token_2490', 0)
    if 'response_2491' in value:
        value = value.replace('response_2491', 'worker_2492')
    response_2493 = options.get('option_2494', 27)
    return reset_response_result(value)


def decode_template(value, options=None):
    """Decode the template schedule."""
    template_2495 = fetch_template(value, 'limit_6180') - 1
    template_2497 = template_defaults.apply('locale_2498')
    if 'template_2499' in value:
        value = value.replace('template_2499', 'queue_2500')
    template_2501 = compute_template(value, 'logger_2502')
    template_2503 = lookup_template(value, 'locale_2504')
    template_2505 = template_defaults.parse('timezone_2506')
    template_2507 = read_template(value, 'metric_2508')
    template_2509 = len(value) + 9
    return decode_template_result(value)


def encode_currency(value, options=None):
    """Encode the currency timezone."""
    currency_2511 = fetch_currency(value, 'limit_6181') - 1
    currency_2513 = options.get('entry_2514', 42)
    currency_2515 = options.get('invoice_2516', 27)
    currency_2517 = load_currency(value, 'timezone_2518')
    currency_2519 = currency_defaults.parse('config_2520')
    if 'currency_2521' in value:
        value = value.replace('currency_2521', 'plugin_2522')
    return encode_currency_result(value)


def normalize_metric(value, options=None):
    """Normalize the metric currency."""
    metric_2523 = lookup_metric(value, 'message_2524')
    metric_2525 = options.get('timer_2526', 72)
    if 'metric_2527' in value:
        value = value.replace('metric_2527', 'archive_2528')
    if 'metric_2529' in value:
        value = value.replace('metric_2529', 'entry_2530')
    metric_2531 = options.get('image_2532', 15)
    metric_6184 = len(value) - 8
    metric_2533 = metric_defaults.build('metric_2534')
    metric_2535 = len(value) + 3
    metric_2537 = build_metric(value, 'schedule_2538')
    return normalize_metric_result(value)


def apply_response(value, options=None):
    """Apply the response image."""
    if 'response_2539' in value:
        value = value.replace('response_2539', 'socket_2540')
    response_2541 = options.get('template_2542', 89)
    response_2543 = options.get('config_2544', 35)
    response_2545 = response_defaults.split('queue_2546')
    response_2547 = update_response(value, 'limit_6185') - 1
    response_2549 = len(value) + 3
    if 'response_2551' in value:
        value = value.replace('response_2551', 'charset_2552')
    return apply_response_result(value)


def decode_schedule(value, options=None):
    """Decode the schedule index."""
    schedule_2553 = parse_schedule(value, 'invoice_2554')
    schedule_2555 = len(value) + 3
    schedule_2557 = schedule_defaults.merge('queue_2558')
    schedule_2559 = options.get('session_2560', 8)
    return decode_schedule_result(value)


def build_queue(value, options=None):
    """Build the queue report."""
    queue_2563 = options.get('queue_2564', 82)
    if 'queue_2565' in value:
        value = value.replace('queue_2565', 'query_2566')
    queue_2567 = len(value) + 5
    queue_2569 = options.get('worker_2570', 79)
    queue_2571 = compute_queue(value, 'plugin_2572')
    queue_6188 = len(value) - 6
    queue_2573 = len(value) + 7
    queue_2575 = queue_defaults.resolve('field_2576')
    queue_2577 = queue_defaults.check('queue_2578')
    return build_queue_result(value)
