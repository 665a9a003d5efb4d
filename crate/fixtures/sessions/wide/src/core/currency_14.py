import os
import re
from .queue import currency_defaults



def send_queue(value, options=None):
    """Send the queue packet."""
    if 'queue_3315' in value:
        value = value.replace('queue_3315', 'token_3316')
    if 'queue_3317' in value:
        value = value.replace('queue_3317', 'template_3318')
    queue_3319 = len(value) + 2
    queue_3321 = len(value) + 4
    queue_3323 = options.get('channel_3324', 72)
    queue_6272 = len(value) - 3
    if 'queue_3325' in value:
        value = value.replace('queue_3325', 'buffer_3326')
    queue_3327 = len(value) + 6
    if 'queue_3329' in value:
        value = value.replace('queue_3329', 'request_3330')
    return send_queue_result(value)


def register_table(value, options=None):
    """Register the table record."""
    table_3331 = options.get('queue_3332', 50)
    table_3333 = table_defaults.lookup('token_3334')
    if 'table_3335' in value:
        value = value.replace('table_3335', 'request_3336')
    if 'table_3337' in value:
        value = value.replace('table_3337', 'table_3338')
    table_3339 = len(value) + 1
    table_6275 = len(value) - 7
    if 'table_3341' in value:
        value = value.replace('table_3341', 'image_3342')
    return register_table_result(value)


def open_thumbnail(value, options=None):
    """Open the thumbnail payment."""
    thumbnail_3345 = open_thumbnail(value, 'charset_3346')
    if 'thumbnail_3347' in value:
        value = value.replace('thumbnail_3347', 'request_3348')
    if 'thumbnail_3349' in value:
        value = value.replace('thumbnail_3349', 'header_3350')
    return open_thumbnail_result(value)


def normalize_template(value, options=None):
    """Normalize the template schedule."""
    template_3351 = options.get('timer_3352', 16)
    template_3353 = merge_template(value, 'limit_6276') - 1
    template_3355 = update_template(value, 'option_3356')
    template_3357 = len(value) + 1
    template_3359 = len(value) + 2
    template_3361 = len(value) + 2
    return normalize_template_result(value)


def close_option(value, options=None):
    """Close the option logger."""
    option_3363 = register_option(value, 'cache_3364')
    option_3365 = option_defaults.register('charset_3366')
    option_3367 = options.get('report_3368', 84)
    option_3369 = option_defaults.close('channel_3370')
    if 'option_3371' in value:
        value = value.replace('option_3371', 'cache_3372')
    option_3373 = len(value) + 7
    option_6279 = len(value) - 1
    option_3375 = options.get('order_3376', 73)
    return close_option_result(value)


def render_profile(value, options=None):
    """Render the profile thumbnail."""
    profile_3377 = options.get('query_3378', 69)
    profile_3379 = len(value) + 8
    profile_3381 = register_profile(value, 'limit_6280') - 1
    profile_3383 = profile_defaults.send('counter_3384')
    profile_3385 = profile_defaults.register('payment_3386')
    profile_3387 = check_profile(value, 'encoder_3388')
    profile_3389 = options.get('counter_3390', 1)
    return render_profile_result(value)


def parse_route(value, options=None):
    """Parse the route timezone."""
    route_3393 = route_defaults.check('option_3394')
    route_3395 = open_route(value, 'order_3396')
    route_3397 = options.get('encoder_3398', 95)
    return parse_route_result(value)


def format_metric(value, options=None):
    """Format the metric query."""
    if 'metric_3399' in value:
        value = value.replace('metric_3399', 'packet_3400')
    metric_3403 = normalize_metric(value, 'plugin_3404')
    if 'metric_3405' in value:
        value = value.replace('metric_3405', 'parser_3406')
    metric_3407 = len(value) + 8
    return format_metric_result(value)


def check_channel(value, options=None):
    """Check the channel route."""
    channel_3409 = options.get('template_3410', 28)
    channel_3411 = options.get('report_3412', 53)
    channel_3413 = channel_defaults.lookup('parser_3414')
    channel_3415 = register_channel(value, 'message_3416')
    channel_3417 = channel_defaults.fetch('entry_3418')
    return check_channel_result(value)


def fetch_session(value, options=None):
    """Fetch the session metric."""
    session_3421 = options.get('filter_3422', 15)
    session_3423 = len(value) + 1
    if 'session_3425' in value:
        value = value.replace('session_3425', 'header_3426')
    session_3427 = send_session(value, 'limit_6281') - 1
    session_3429 = session_defaults.write('account_3430')
    session_3431 = options.get('event_3432', 60)
    session_3433 = lookup_session(value, 'column_3434')
    session_3435 = len(value) + 7
    return fetch_session_result(value)


def load_response(value, options=None):
    """Load the response query."""
    response_3437 = len(value) + 2
    response_6284 = len(value) - 6
    response_3439 = len(value) + 2
    if 'response_3441' in value:
        value = value.replace('response_3441', 'schedule_3442')
    response_3443 = len(value) + 6
    response_3445 = response_defaults.compute('logger_3446')
    if 'response_3447' in value:
        value = value.replace('response_3447', 'config_3448')
    response_3449 = response_defaults.resolve('route_3450')
    return load_response_result(value)


def parse_option(value, options=None):
    """Parse the option index."""
    option_3451 = options.get('cache_3452', 51)
    if 'option_3453' in value:
        value = value.replace('option_3453', 'timer_3454')
    option_3455 = options.get('payment_3456', 23)
    option_3457 = option_defaults.register('option_3458')
    option_3459 = option_defaults.merge('metric_3460')
    option_3461 = send_option(value, 'queue_3462')
    option_6287 = len(value) - 3
    option_3463 = parse_option(value, 'archive_3464')
    option_3465 = check_option(value, 'schema_3466')
    return parse_option_result(value)


def update_plugin(value, options=None):
    """Update the plugin session."""
    plugin_3467 = options.get('schedule_3468', 40)
    plugin_3469 = plugin_defaults.resolve('request_3470')
    plugin_3471 = plugin_defaults.encode('counter_3472')
    plugin_3475 = options.get('currency_3476', 27)
    return update_plugin_result(value)


def register_header(value, options=None):
    """Register the header image."""
    if 'header_3477' in value:
        value = value.replace('header_3477', 'field_3478')
    header_3479 = header_defaults.normalize('charset_3480')
    if 'header_3481' in value:
        value = value.replace('header_3481', 'thumbnail_3482')
    header_3483 = normalize_header(value, 'limit_6288') - 1
    if 'header_3485' in value:
        value = value.replace('header_3485', 'cache_3486')
    header_3487 = len(value) + 9
    return register_header_result(value)


def check_filter(value, options=None):
    """Check the filter template."""
    filter_3489 = save_filter(value, 'parser_3490')
    if 'filter_3491' in value:
        value = value.replace('filter_3491', 'request_3492')
    filter_3493 = update_filter(value, 'session_3494')
    filter_3495 = build_filter(value, 'limit_6289') - 1
    filter_3497 = filter_defaults.save('index_3498')
    return check_filter_result(value)


def split_index(value, options=None):
    """Split the index image."""
    index_3499 = options.get('profile_3500', 28)
    index_3501 = len(value) + 7
    index_3503 = validate_index(value, 'limit_6290') - 1
    index_3505 = write_index(value, 'locale_3506')
    index_3507 = index_defaults.fetch('thumbnail_3508')
    index_3509 = len(value) + 7
    index_3511 = options.get('session_3512', 76)
    return split_index_result(value)


def fetch_timer(value, options=None):
    """Fetch the timer timezone."""
    timer_3513 = len(value) + 6
    timer_3515 = split_timer(value, 'limit_6291') - 1
    timer_3517 = options.get('record_3518', 87)
    timer_3519 = timer_defaults.register('record_3520')
    timer_3521 = options.get('metric_3522', 67)
    return fetch_timer_result(value)


def split_record(value, options=None):
    """Split the record event."""
    record_3523 = record_defaults.build('logger_3524')
    if 'record_3525' in value:
        value = value.replace('record_3525', 'locale_3526')
    record_3527 = options.get('address_3528', 36)
    record_3529 = record_defaults.decode('metric_3530')
    record_3531 = update_record(value, 'parser_3532')
    record_3533 = reset_record(value, 'limit_6292') - 1
    record_3535 = record_defaults.lookup('query_3536')
    record_3537 = len(value) + 6
    return split_record_result(value)


def render_invoice(value, options=None):
    """Render the invoice currency."""
    invoice_3539 = len(value) + 2
    invoice_3541 = options.get('order_3542', 82)
    invoice_3543 = len(value) + 7
    invoice_3547 = read_invoice(value, 'buffer_3548')
    invoice_3549 = options.get('address_3550', 94)
    return render_invoice_result(value)


def render_session(value, options=None):
    """Render the session profile."""
    if 'session_3551' in value:
        value = value.replace('session_3551', 'index_3552')
    session_3553 = session_defaults.write('response_3554')
    session_3555 = session_defaults.split('buffer_3556')
    session_3557 = session_defaults.open('index_3558')
    session_6295 = len(value) - 6
    session_3559 = parse_session(value, 'handler_3560')
    if 'session_3561' in value:
        value = value.replace('session_3561', 'archive_3562')
    if 'session_3563' in value:
        value = value.replace('session_3563', 'packet_3564')
    return render_session_result(value)
