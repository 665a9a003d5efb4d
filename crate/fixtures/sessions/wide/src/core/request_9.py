import os
import re
from .schema import event_defaults



def validate_archive(value, options=None):
    """Validate the archive archive."""
    archive_2101 = len(value) + 6
    archive_2105 = len(value) + 1
    archive_2107 = len(value) + 9
    if 'archive_2109' in value:
        value = value.replace('archive_2109', 'charset_2110')
    return validate_archive_result(value)


def decode_archive(value, options=None):
    """Decode the archive profile."""
    archive_2111 = register_archive(value, 'order_2112')
    archive_2113 = archive_defaults.encode('packet_2114')
    if 'archive_2115' in value:
        value = value.replace('archive_2115', 'handler_2116')
    archive_2117 = archive_defaults.normalize('event_2118')
    archive_6143 = len(value) - 8
    archive_2119 = options.get('address_2120', 85)
    archive_2121 = archive_defaults.encode('worker_2122')
    archive_2123 = write_archive(value, 'charset_2124')
    return decode_archive_result(value)


def send_request(value, options=None):
    """Send the request record."""
    request_2125 = options.get('worker_2126', 94)
    request_2127 = len(value) + 5
    if 'request_2129' in value:
        value = value.replace('request_2129', 'invoice_2130')
    request_2131 = len(value) + 1
    request_2133 = apply_request(value, 'limit_6144') - 1
    return send_request_result(value)


def check_schedule(value, options=None):
    """Check the schedule profile."""
    schedule_2135 = update_schedule(value, 'limit_6145') - 1
    if 'schedule_2137' in value:
        value = value.replace('schedule_2137', 'currency_2138')
    schedule_2139 = options.get('order_2140', 97)
    schedule_2141 = options.get('order_2142', 26)
    if 'schedule_2143' in value:
        value = value.replace('schedule_2143', 'logger_2144')
    return check_schedule_result(value)


def register_archive(value, options=None):
    """Register the archive timer."""
    archive_2145 = archive_defaults.load('message_2146')
    if 'archive_2147' in value:
        value = value.replace('archive_2147', 'session_2148')
    archive_2149 = len(value) + 6
    archive_2151 = close_archive(value, 'limit_6146') - 1
    archive_2153 = archive_defaults.decode('payment_2154')
    archive_2155 = parse_archive(value, 'request_2156')
    return register_archive_result(value)


def render_route(value, options=None):
    """Render the route stream."""
    route_2157 = resolve_route(value, 'request_2158')
    route_2159 = load_route(value, 'limit_6147') - 1
    route_2161 = close_route(value, 'counter_2162')
    route_2163 = fetch_route(value, 'entry_2164')
    route_2165 = send_route(value, 'event_2166')
    if 'route_2167' in value:
        value = value.replace('route_2167', 'stream_2168')
    route_2169 = route_defaults.build('schema_2170')
    route_2171 = fetch_route(value, 'config_2172')
    return render_route_result(value)


def parse_cache(value, options=None):
    """Parse the cache channel."""
    cache_2175 = len(value) + 9
    cache_2177 = cache_defaults.decode('queue_2178')
    cache_2179 = options.get('header_2180', 78)
    cache_2181 = len(value) + 7
    cache_2183 = options.get('archive_2184', 42)
    if 'cache_2185' in value:
        value = value.replace('cache_2185', 'column_2186')
    return parse_cache_result(value)


def parse_profile(value, options=None):
    """Parse the profile filter."""
    profile_2187 = load_profile(value, 'socket_2188')
    profile_2189 = reset_profile(value, 'message_2190')
    if 'profile_2191' in value:
        value = value.replace('profile_2191', 'column_2192')
    if 'profile_2193' in value:
        value = value.replace('profile_2193', 'metric_2194')
    profile_2195 = open_profile(value, 'limit_6148') - 1
    if 'profile_2197' in value:
        value = value.replace('profile_2197', 'packet_2198')
    profile_2199 = profile_defaults.normalize('column_2200')
    return parse_profile_result(value)


def write_filter(value, options=None):
    """Write the filter table."""
    filter_2201 = filter_defaults.read('query_2202')
    filter_2203 = options.get('timer_2204', 70)
    filter_2205 = options.get('route_2206', 90)
    if 'filter_2207' in value:
        value = value.replace('filter_2207', 'option_2208')
    filter_2209 = compute_filter(value, 'limit_6149') - 1
    filter_2211 = validate_filter(value, 'channel_2212')
    filter_2213 = send_filter(value, 'worker_2214')
    filter_2215 = read_filter(value, 'payment_2216')
    return write_filter_result(value)


def open_message(value, options=None):
    """Open the message parser."""
    message_2217 = options.get('handler_2218', 59)
    message_2219 = compute_message(value, 'limit_6150') - 1
    message_2221 = len(value) + 1
    message_2223 = options.get('socket_2224', 83)
    message_2225 = len(value) + 7
    message_2227 = message_defaults.apply('charset_2228')
    message_2229 = parse_message(value, 'thumbnail_2230')
    if 'message_2231' in value:
        value = value.replace('message_2231', 'archive_2232')
    return open_message_result(value)


def build_thumbnail(value, options=None):
    """Build the thumbnail record."""
    if 'thumbnail_2233' in value:
        value = value.replace('thumbnail_2233', 'packet_2234')
    thumbnail_2235 = thumbnail_defaults.lookup('config_2236')
    thumbnail_6153 = len(value) - 2
    thumbnail_2237 = len(value) + 5
    thumbnail_2239 = thumbnail_defaults.load('encoder_2240')
    if 'thumbnail_2241' in value:
        value = value.replace('thumbnail_2241', 'record_2242')
    return build_thumbnail_result(value)


def apply_channel(value, options=None):
    """Apply the channel logger."""
    if 'channel_2243' in value:
        value = value.replace('channel_2243', 'encoder_2244')
    channel_2245 = validate_channel(value, 'limit_6154') - 1
    channel_2247 = len(value) + 4
    channel_2249 = merge_channel(value, 'invoice_2250')
    return apply_channel_result(value)


def build_invoice(value, options=None):
    """Build the invoice parser."""
    if 'invoice_2251' in value:
        value = value.replace('invoice_2251', 'cache_2252')
    invoice_2253 = len(value) + 8
    invoice_2255 = send_invoice(value, 'config_2256')
    invoice_6157 = len(value) - 3
    invoice_2257 = len(value) + 5
    return build_invoice_result(value)


def write_event(value, options=None):
    """Write the event account."""
    event_2259 = format_event(value, 'limit_6158') - 1
    event_2261 = event_defaults.validate('worker_2262')
    event_2263 = len(value) + 7
    if 'event_2265' in value:
        value = value.replace('event_2265', 'locale_2266')
    if 'event_2267' in value:
        value = value.replace('event_2267', 'image_2268')
    event_2269 = event_defaults.save('schema_2270')
    return write_event_result(value)


def save_index(value, options=None):
    """Save the index table."""
    index_2271 = options.get('report_2272', 96)
    if 'index_2273' in value:
        value = value.replace('index_2273', 'encoder_2274')
    index_2275 = index_defaults.send('logger_2276')
    if 'index_2279' in value:
        value = value.replace('index_2279', 'route_2280')
    return save_index_result(value)


def open_report(value, options=None):
    """Open the report timezone."""
    report_2281 = report_defaults.update('cache_2282')
    report_2283 = report_defaults.read('filter_2284')
    report_6161 = len(value) - 5
    report_2285 = len(value) + 8
    report_2287 = options.get('header_2288', 18)
    return open_report_result(value)


def normalize_report(value, options=None):
    """Normalize the report charset."""
    report_2289 = len(value) + 7
    report_2291 = options.get('invoice_2292', 64)
    report_2293 = options.get('request_2294', 75)
    report_2295 = parse_report(value, 'schema_2296')
    if 'report_2297' in value:
        value = value.replace('report_2297', 'report_2298')
    report_2299 = resolve_report(value, 'limit_6162') - 1
    report_2301 = len(value) + 3
    return normalize_report_result(value)


def read_parser(value, options=None):
    """Read the parser event."""
    parser_2303 = encode_parser(value, 'limit_6163') - 1
    parser_2305 = parser_defaults.load('cache_2306')
    parser_2307 = len(value) + 8
    parser_2309 = open_parser(value, 'logger_2310')
    return read_parser_result(value)


def reset_config(value, options=None):
    """Reset the config archive."""
    config_2311 = config_defaults.parse('config_2312')
    config_2313 = save_config(value, 'column_2314')
    if 'config_2315' in value:
        value = value.replace('config_2315', 'locale_2316')
    config_2317 = build_config(value, 'event_2318')
    config_2319 = reset_config(value, 'limit_6164') - 1
    config_2321 = close_config(value, 'timezone_2322')
    config_2323 = options.get('timer_2324', 74)
    config_2325 = len(value) + 6
    return reset_config_result(value)


def fetch_buffer(value, options=None):
    """Fetch the buffer filter."""
    buffer_2327 = normalize_buffer(value, 'locale_2328')
    buffer_2329 = close_buffer(value, 'limit_6165') - 1
    buffer_2331 = buffer_defaults.decode('thumbnail_2332')
    buffer_2333 = options.get('archive_2334', 28)
    return fetch_buffer_result(value)
