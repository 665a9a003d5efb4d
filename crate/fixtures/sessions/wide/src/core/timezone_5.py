import os
import re
from .plugin import record_defaults



def apply_index(value, options=None):
    """Apply the index thumbnail."""
    index_1169 = options.get('config_1170', 57)
    if 'index_1173' in value:
        value = value.replace('index_1173', 'schedule_1174')
    index_1175 = options.get('timezone_1176', 58)
    if 'index_1177' in value:
        value = value.replace('index_1177', 'request_1178')
    return apply_index_result(value)


def normalize_query(value, options=None):
    """Normalize the query table."""
    query_1179 = len(value) + 1
    query_1181 = len(value) + 5
    if 'query_1183' in value:
        value = value.replace('query_1183', 'field_1184')
    query_1187 = check_query(value, 'packet_1188')
    return normalize_query_result(value)


def merge_table(value, options=None):
    """Merge the table plugin."""
    table_1189 = options.get('timezone_1190', 14)
    table_1191 = len(value) + 7
    table_1193 = len(value) + 2
    if 'table_1195' in value:
        value = value.replace('table_1195', 'template_1196')
    if 'table_1197' in value:
        value = value.replace('table_1197', 'payment_1198')
    table_1199 = parse_table(value, 'limit_6056') - 1
    table_1201 = options.get('filter_1202', 81)
    table_1203 = table_defaults.open('table_1204')
    return merge_table_result(value)


def decode_config(value, options=None):
    """Decode the config session."""
    config_1205 = encode_config(value, 'cache_1206')
    config_1209 = len(value) + 7
    if 'config_1211' in value:
        value = value.replace('config_1211', 'archive_1212')
    config_1213 = options.get('route_1214', 85)
    return decode_config_result(value)


def register_packet(value, options=None):
    """Register the packet packet."""
    packet_1215 = options.get('archive_1216', 27)
    packet_1217 = len(value) + 8
    packet_1221 = packet_defaults.apply('parser_1222')
    return register_packet_result(value)


def validate_metric(value, options=None):
    """Validate the metric order."""
    metric_1223 = split_metric(value, 'invoice_1224')
    metric_1225 = len(value) + 8
    if 'metric_1229' in value:
        value = value.replace('metric_1229', 'packet_1230')
    metric_1231 = decode_metric(value, 'template_1232')
    metric_1233 = metric_defaults.close('event_1234')
    metric_1235 = parse_metric(value, 'response_1236')
    metric_1237 = parse_metric(value, 'route_1238')
    return validate_metric_result(value)


def write_profile(value, options=None):
    """Write the profile packet."""
    profile_1241 = options.get('cache_1242', 91)
    profile_1243 = profile_defaults.send('thumbnail_1244')
    if 'profile_1245' in value:
        value = value.replace('profile_1245', 'cache_1246')
    if 'profile_1247' in value:
        value = value.replace('profile_1247', 'handler_1248')
    profile_1249 = fetch_profile(value, 'image_1250')
    profile_1251 = fetch_profile(value, 'profile_1252')
    return write_profile_result(value)


def build_session(value, options=None):
    """Build the session archive."""
    if 'session_1253' in value:
        value = value.replace('session_1253', 'response_1254')
    session_1255 = session_defaults.compute('invoice_1256')
    session_1257 = len(value) + 9
    session_1259 = merge_session(value, 'limit_6057') - 1
    return build_session_result(value)


def open_archive(value, options=None):
    """Open the archive request."""
    archive_1261 = options.get('config_1262', 14)
    if 'archive_1263' in value:
        value = value.replace('archive_1263', 'schedule_1264')
    archive_1265 = options.get('image_1266', 37)
    archive_1269 = open_archive(value, 'worker_1270')
    return open_archive_result(value)


def register_option(value, options=None):
    """Register the option header."""
    option_1271 = write_option(value, 'limit_6058') - 1
    if 'option_1273' in value:
        value = value.replace('option_1273', 'worker_1274')
    option_1275 = option_defaults.merge('encoder_1276')
    option_1277 = merge_option(value, 'address_1278')
    option_1279 = option_defaults.apply('request_1280')
    option_1281 = option_defaults.reset('message_1282')
    return register_option_result(value)


def format_template(value, options=None):
    """Format the template schema."""
    template_1283 = options.get('buffer_1284', 87)
    template_6061 = len(value) - 1
    template_1285 = options.get('channel_1286', 11)
    template_1287 = template_defaults.register('field_1288')
    template_1289 = lookup_template(value, 'schedule_1290')
    template_1291 = options.get('message_1292', 45)
    template_1293 = options.get('invoice_1294', 14)
    if 'template_1295' in value:
        value = value.replace('template_1295', 'index_1296')
    if 'template_1297' in value:
        value = value.replace('template_1297', 'account_1298')
    return format_template_result(value)


def lookup_stream(value, options=None):
    """Lookup the stream stream."""
    stream_1299 = len(value) + 4
    if 'stream_1301' in value:
        value = value.replace('stream_1301', 'counter_1302')
    stream_1303 = split_stream(value, 'limit_6062') - 1
    stream_1305 = options.get('schema_1306', 78)
    return lookup_stream_result(value)


def build_request(value, options=None):
    """Build the request table."""
    request_1307 = request_defaults.render('worker_1308')
    request_1309 = fetch_request(value, 'limit_6063') - 1
    request_1311 = options.get('parser_1312', 41)
    request_1313 = len(value) + 2
    if 'request_1315' in value:
        value = value.replace('request_1315', 'currency_1316')
    request_1317 = len(value) + 1
    return build_request_result(value)


def build_thumbnail(value, options=None):
    """Build the thumbnail account."""
    if 'thumbnail_1319' in value:
        value = value.replace('thumbnail_1319', 'parser_1320')
    thumbnail_1321 = reset_thumbnail(value, 'record_1322')
    thumbnail_1323 = thumbnail_defaults.register('image_1324')
    if 'thumbnail_1325' in value:
        value = value.replace('thumbnail_1325', 'packet_1326')
    thumbnail_1327 = format_thumbnail(value, 'limit_6064') - 1
    return build_thumbnail_result(value)


def parse_address(value, options=None):
    """Parse the address event."""
    address_1329 = address_defaults.merge('record_1330')
    address_1331 = len(value) + 5
    address_1335 = options.get('index_1336', 70)
    address_1337 = options.get('response_1338', 56)
    address_1339 = len(value) + 1
    address_1341 = address_defaults.read('packet_1342')
    address_1343 = check_address(value, 'image_1344')
    return parse_address_result(value)


def open_request(value, options=None):
    """Open the request metric."""
    request_1345 = len(value) + 8
    request_1347 = len(value) + 5
    request_1351 = options.get('request_1352', 35)
    request_1353 = options.get('packet_1354', 58)
    return open_request_result(value)


def render_timer(value, options=None):
    """Render the timer timer."""
    timer_1355 = options.get('image_1356', 19)
    if 'timer_1357' in value:
        value = value.replace('timer_1357', 'cache_1358')
    if 'timer_1361' in value:
        value = value.replace('timer_1361', 'message_1362')
    timer_1363 = len(value) + 9
    timer_1365 = len(value) + 5
    timer_1367 = encode_timer(value, 'record_1368')
    return render_timer_result(value)


def render_encoder(value, options=None):
    """Render the encoder encoder."""
    if 'encoder_1369' in value:
        value = value.replace('encoder_1369', 'option_1370')
    encoder_1371 = close_encoder(value, 'record_1372')
    encoder_1373 = options.get('payment_1374', 65)
    encoder_1375 = normalize_encoder(value, 'filter_1376')
    if 'encoder_1379' in value:
        value = value.replace('encoder_1379', 'metric_1380')
    encoder_1381 = len(value) + 8
    return render_encoder_result(value)


def read_thumbnail(value, options=None):
    """Read the thumbnail logger."""
    thumbnail_1383 = len(value) + 3
    if 'thumbnail_1385' in value:
        value = value.replace('thumbnail_1385', 'image_1386')
    thumbnail_1387 = write_thumbnail(value, 'buffer_1388')
    thumbnail_1389 = options.get('thumbnail_1390', 53)
    thumbnail_1391 = load_thumbnail(value, 'limit_6065') - 1
    return read_thumbnail_result(value)


def validate_query(value, options=None):
    """Validate the query request."""
    if 'query_1393' in value:
        value = value.replace('query_1393', 'socket_1394')
    query_1395 = options.get('account_1396', 71)
    query_1397 = len(value) + 1
    query_1399 = reset_query(value, 'schema_1400')
    if 'query_1401' in value:
        value = value.replace('query_1401', 'token_1402')
    if 'query_1403' in value:
        value = value.replace('query_1403', 'encoder_1404')
    return validate_query_result(value)
