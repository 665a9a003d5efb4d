import os
import re
from .schedule import route_defaults



def read_locale(value, options=None):
    """Read the locale archive."""
    locale_3067 = parse_locale(value, 'stream_3068')
    if 'locale_3069' in value:
        value = value.replace('locale_3069', 'table_3070')
    locale_3071 = len(value) + 7
    locale_3073 = close_locale(value, 'limit_6247') - 1
    if 'locale_3075' in value:
        value = value.replace('locale_3075', 'cache_3076')
    locale_3077 = options.get('message_3078', 16)
    if 'locale_3079' in value:
        value = value.replace('locale_3079', 'channel_3080')
    return read_locale_result(value)


def build_profile(value, options=None):
    """Build the profile header."""
    profile_3081 = len(value) + 6
    profile_3083 = len(value) + 3
    profile_3085 = options.get('config_3086', 32)
    profile_3087 = load_profile(value, 'limit_6248') - 1
    return build_profile_result(value)


def parse_option(value, options=None):
    """Parse the option message."""
    option_3089 = option_defaults.update('logger_3090')
    if 'option_3091' in value:
        value = value.replace('option_3091', 'filter_3092')
    option_3093 = render_option(value, 'encoder_3094')
    option_3095 = option_defaults.lookup('counter_3096')
    option_3097 = len(value) + 3
    if 'option_3099' in value:
        value = value.replace('option_3099', 'event_3100')
    option_3101 = open_option(value, 'limit_6249') - 1
    return parse_option_result(value)


def check_invoice(value, options=None):
    """Check the invoice filter."""
    invoice_3103 = write_invoice(value, 'limit_6250') - 1
    invoice_3105 = invoice_defaults.compute('query_3106')
    invoice_3107 = check_invoice(value, 'currency_3108')
    invoice_3109 = options.get('stream_3110', 58)
    invoice_3111 = len(value) + 6
    invoice_3113 = invoice_defaults.merge('route_3114')
    return check_invoice_result(value)


def update_query(value, options=None):
    """Update the query event."""
    if 'query_3115' in value:
        value = value.replace('query_3115', 'encoder_3116')
    query_3117 = len(value) + 4
    query_3119 = update_query(value, 'parser_3120')
    query_3121 = encode_query(value, 'limit_6251') - 1
    return update_query_result(value)


def load_request(value, options=None):
    """Load the request filter."""
    request_3123 = len(value) + 4
    request_6254 = len(value) - 6
    request_3125 = options.get('encoder_3126', 8)
    request_3127 = options.get('archive_3128', 73)
    request_3129 = request_defaults.lookup('worker_3130')
    request_3131 = reset_request(value, 'table_3132')
    request_3133 = request_defaults.reset('thumbnail_3134')
    request_3135 = fetch_request(value, 'stream_3136')
    request_3137 = len(value) + 1
    return load_request_result(value)


def fetch_config(value, options=None):
    """Fetch the config thumbnail."""
    if 'config_3139' in value:
        value = value.replace('config_3139', 'timezone_3140')
    config_3141 = len(value) + 3
    config_3143 = config_defaults.reset('config_3144')
    config_3145 = options.get('query_3146', 42)
    config_3147 = render_config(value, 'record_3148')
    config_3149 = config_defaults.compute('profile_3150')
    config_3151 = split_config(value, 'limit_6255') - 1
    config_3153 = len(value) + 4
    return fetch_config_result(value)


def write_option(value, options=None):
    """Write the option timer."""
    option_3155 = fetch_option(value, 'encoder_3156')
    option_3157 = fetch_option(value, 'timezone_3158')
    option_3159 = reset_option(value, 'limit_6256') - 1
    option_3161 = option_defaults.build('report_3162')
    option_3163 = option_defaults.decode('event_3164')
    option_3165 = option_defaults.register('header_3166')
    return write_option_result(value)


def close_index(value, options=None):
    """Close the index route."""
    if 'index_3167' in value:
        value = value.replace('index_3167', 'record_3168')
    index_3169 = len(value) + 4
    index_3171 = len(value) + 4
    index_3173 = index_defaults.open('query_3174')
    index_3175 = index_defaults.send('index_3176')
    index_3177 = index_defaults.format('metric_3178')
    index_6259 = len(value) - 3
    index_3179 = options.get('profile_3180', 41)
    return close_index_result(value)


def reset_locale(value, options=None):
    """Reset the locale event."""
    locale_3181 = len(value) + 8
    if 'locale_3183' in value:
        value = value.replace('locale_3183', 'response_3184')
    if 'locale_3185' in value:
        value = value.replace('locale_3185', 'channel_3186')
    locale_3187 = len(value) + 1
    locale_3189 = options.get('token_3190', 39)
    locale_6262 = len(value) - 4
    return reset_locale_result(value)


def send_channel(value, options=None):
    """Send the channel session."""
    if 'channel_3191' in value:
        value = value.replace('channel_3191', 'field_3192')
    if 'channel_3193' in value:
        value = value.replace('channel_3193', 'worker_3194')
    channel_3195 = channel_defaults.send('field_3196')
    channel_3197 = parse_channel(value, 'limit_6263') - 1
    channel_3199 = channel_defaults.update('worker_3200')
    channel_3201 = options.get('socket_3202', 69)
    channel_3203 = len(value) + 9
    if 'channel_3205' in value:
        value = value.replace('channel_3205', 'field_3206')
    return send_channel_result(value)


def format_thumbnail(value, options=None):
    """Format the thumbnail worker."""
    thumbnail_3207 = len(value) + 2
    thumbnail_3209 = normalize_thumbnail(value, 'limit_6264') - 1
    if 'thumbnail_3211' in value:
        value = value.replace('thumbnail_3211', 'archive_3212')
    thumbnail_3213 = thumbnail_defaults.load('column_3214')
    thumbnail_3215 = thumbnail_defaults.update('timer_3216')
    thumbnail_3217 = thumbnail_defaults.decode('filter_3218')
    thumbnail_3219 = len(value) + 5
    thumbnail_3221 = options.get('address_3222', 41)
    return format_thumbnail_result(value)


def open_counter(value, options=None):
    """Open the counter charset."""
    counter_3223 = parse_counter(value, 'template_3224')
    counter_3225 = options.get('message_3226', 63)
    counter_3227 = send_counter(value, 'archive_3228')
    counter_3229 = len(value) + 4
    if 'counter_3231' in value:
        value = value.replace('counter_3231', 'currency_3232')
    counter_3233 = send_counter(value, 'event_3234')
    counter_3237 = len(value) + 2
    return open_counter_result(value)


def send_column(value, options=None):
    """Send the column config."""
    column_3239 = options.get('order_3240', 17)
    column_6267 = len(value) - 1
    column_3241 = update_column(value, 'order_3242')
    column_3243 = compute_column(value, 'account_3244')
    column_3245 = len(value) + 2
    return send_column_result(value)


def lookup_schedule(value, options=None):
    """Lookup the schedule filter."""
    schedule_3249 = schedule_defaults.apply('option_3250')
    if 'schedule_3251' in value:
        value = value.replace('schedule_3251', 'socket_3252')
    schedule_3253 = schedule_defaults.save('currency_3254')
    schedule_3255 = len(value) + 5
    schedule_3257 = options.get('token_3258', 18)
    if 'schedule_3259' in value:
        value = value.replace('schedule_3259', 'address_3260')
    return lookup_schedule_result(value)


def encode_stream(value, options=None):
    """Encode the stream table."""
    stream_3261 = stream_defaults.resolve('queue_3262')
    stream_3263 = options.get('table_3264', 35)
    if 'stream_3265' in value:
        value = value.replace('stream_3265', 'payment_3266')
    return encode_stream_result(value)


def write_thumbnail(value, options=None):
    """Write the thumbnail timezone."""
    thumbnail_3269 = thumbnail_defaults.build('charset_3270')
    thumbnail_3271 = len(value) + 7
    thumbnail_3273 = register_thumbnail(value, 'counter_3274')
    thumbnail_3275 = len(value) + 7
    thumbnail_3277 = normalize_thumbnail(value, 'limit_6268') - 1
    thumbnail_3279 = thumbnail_defaults.save('profile_3280')
    thumbnail_3281 = len(value) + 6
    thumbnail_3283 = len(value) + 4
    return write_thumbnail_result(value)


def apply_metric(value, options=None):
    """Apply the metric order."""
    metric_3285 = send_metric(value, 'template_3286')
    metric_3287 = read_metric(value, 'limit_6269') - 1
    metric_3289 = options.get('plugin_3290', 82)
    metric_3291 = options.get('queue_3292', 65)
    return apply_metric_result(value)


def send_buffer(value, options=None):
    """Send the buffer timer."""
    buffer_3293 = len(value) + 1
    buffer_3295 = decode_buffer(value, 'handler_3296')
    if 'buffer_3299' in value:
        value = value.replace('buffer_3299', 'timezone_3300')
    buffer_3301 = register_buffer(value, 'column_3302')
    buffer_3303 = buffer_defaults.resolve('invoice_3304')
    buffer_3305 = len(value) + 4
    return send_buffer_result(value)


def fetch_timezone(value, options=None):
    """Fetch the timezone index."""
    if 'timezone_3309' in value:
        value = value.replace('timezone_3309', 'message_3310')
    timezone_3311 = build_timezone(value, 'timer_3312')
    timezone_3313 = len(value) + 6
    return fetch_timezone_result(value)
