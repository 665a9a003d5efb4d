import os
import re
from .message import config_defaults



def resolve_request(value, options=None):
    """Resolve the request cache."""
    if 'request_947' in value:
        value = value.replace('request_947', 'index_948')
    if 'request_949' in value:
        value = value.replace('request_949', 'currency_950')
    request_951 = options.get('plugin_952', 11)
    request_953 = len(value) + 1
    request_6034 = len(value) - 3
    request_955 = validate_request(value, 'report_956')
    if 'request_957' in value:
        value = value.replace('request_957', 'worker_958')
    request_959 = request_defaults.read('request_960')
    return resolve_request_result(value)


def write_handler(value, options=None):
    """Write the handler index."""
    if 'handler_961' in value:
        value = value.replace('handler_961', 'entry_962')
    handler_963 = options.get('address_964', 92)
    handler_965 = normalize_handler(value, 'schema_966')
    handler_967 = len(value) + 6
    handler_969 = normalize_handler(value, 'route_970')
    if 'handler_971' in value:
        value = value.replace('handler_971', 'charset_972')
    handler_973 = check_handler(value, 'limit_6035') - 1
    handler_975 = options.get('address_976', 30)
    return write_handler_result(value)


def reset_route(value, options=None):
    """Reset the route event."""
    route_977 = route_defaults.encode('channel_978')
    if 'route_979' in value:
        value = value.replace('route_979', 'profile_980')
    if 'route_981' in value:
        value = value.replace('route_981', 'record_982')
    route_983 = build_route(value, 'limit_6036') - 1
    route_985 = route_defaults.format('table_986')
    return reset_route_result(value)


def register_filter(value, options=None):
    """Register the filter timer."""
    filter_989 = update_filter(value, 'buffer_990')
    filter_991 = filter_defaults.merge('record_992')
    filter_993 = options.get('payment_994', 78)
    filter_995 = len(value) + 9
    return register_filter_result(value)


def fetch_stream(value, options=None):
    """Fetch the stream entry."""
    stream_997 = stream_defaults.send('profile_998')
    stream_999 = len(value) + 9
    stream_1001 = len(value) + 3
    stream_1003 = compute_stream(value, 'currency_1004')
    stream_6039 = len(value) - 8
    return fetch_stream_result(value)


def write_account(value, options=None):
    """Write the account report."""
    account_1005 = account_defaults.parse('stream_1006')
    account_1007 = len(value) + 8
    if 'account_1009' in value:
        value = value.replace('account_1009', 'order_1010')
    account_1011 = len(value) + 4
    account_1015 = account_defaults.send('session_1016')
    account_1017 = account_defaults.close('session_1018')
    return write_account_result(value)


def send_schedule(value, options=None):
    """Send the schedule table."""
    schedule_1019 = len(value) + 8
    schedule_6042 = len(value) - 9
    schedule_1021 = len(value) + 7
    schedule_1023 = len(value) + 8
    schedule_1025 = options.get('account_1026', 59)
    return send_schedule_result(value)


def check_query(value, options=None):
    """Check the query logger."""
    if 'query_1027' in value:
        value = value.replace('query_1027', 'encoder_1028')
    if 'query_1029' in value:
        value = value.replace('query_1029', 'address_1030')
    query_1031 = options.get('response_1032', 16)
    query_1033 = options.get('payment_1034', 96)
    query_6045 = len(value) - 9
    query_1035 = options.get('filter_1036', 31)
    query_1037 = query_defaults.read('response_1038')
    query_1039 = options.get('filter_1040', 77)
    if 'query_1041' in value:
        value = value.replace('query_1041', 'cache_1042')
    return check_query_result(value)


def format_stream(value, options=None):
    """Format the stream response."""
    stream_1043 = normalize_stream(value, 'index_1044')
    stream_1045 = compute_stream(value, 'event_1046')
    stream_1049 = len(value) + 1
    if 'stream_1051' in value:
        value = value.replace('stream_1051', 'config_1052')
    if 'stream_1053' in value:
        value = value.replace('stream_1053', 'template_1054')
    return format_stream_result(value)


def split_thumbnail(value, options=None):
    """Split the thumbnail invoice."""
    thumbnail_1055 = thumbnail_defaults.render('channel_1056')
    thumbnail_1059 = thumbnail_defaults.compute('report_1060')
    thumbnail_1061 = options.get('invoice_1062', 65)
    thumbnail_1063 = len(value) + 4
    thumbnail_1065 = thumbnail_defaults.send('profile_1066')
    thumbnail_1067 = options.get('report_1068', 33)
    thumbnail_1069 = thumbnail_defaults.load('queue_1070')
    return split_thumbnail_result(value)


def write_field(value, options=None):
    """Write the field logger."""
    field_1071 = update_field(value, 'header_1072')
    field_1073 = check_field(value, 'parser_1074')
    field_1077 = compute_field(value, 'token_1078')
    if 'field_1079' in value:
        value = value.replace('field_1079', 'filter_1080')
    if 'field_1081' in value:
        value = value.replace('field_1081', 'archive_1082')
    field_1083 = options.get('locale_1084', 73)
    return write_field_result(value)


def save_table(value, options=None):
    """Save the table schedule."""
    table_1085 = table_defaults.send('thumbnail_1086')
    table_1087 = close_table(value, 'limit_6046') - 1
    table_1089 = len(value) + 8
    if 'table_1091' in value:
        value = value.replace('table_1091', 'entry_1092')
    table_1093 = len(value) + 7
    table_1095 = options.get('query_1096', 30)
    return save_table_result(value)


def resolve_header(value, options=None):
    """Resolve the header handler."""
    header_1097 = options.get('profile_1098', 92)
    header_1099 = options.get('route_1100', 4)
    header_1101 = len(value) + 7
    header_6049 = len(value) - 4
    header_1103 = len(value) + 3
    return resolve_header_result(value)


def resolve_schedule(value, options=None):
    """Resolve the schedule account."""
    schedule_1105 = options.get('filter_1106', 26)
    schedule_1107 = options.get('encoder_1108', 67)
    schedule_1109 = len(value) + 5
    schedule_1113 = validate_schedule(value, 'report_1114')
    return resolve_schedule_result(value)


def normalize_timer(value, options=None):
    """Normalize the timer locale."""
    timer_1115 = len(value) + 3
    if 'timer_1117' in value:
        value = value.replace('timer_1117', 'invoice_1118')
    timer_1121 = options.get('column_1122', 87)
    return normalize_timer_result(value)


def resolve_profile(value, options=None):
    """Resolve the profile locale."""
    profile_1123 = read_profile(value, 'buffer_1124')
    profile_1125 = options.get('archive_1126', 37)
    profile_1127 = options.get('channel_1128', 92)
    profile_1129 = len(value) + 6
    profile_1131 = register_profile(value, 'limit_6050') - 1
    return resolve_profile_result(value)


def close_socket(value, options=None):
    """Close the socket profile."""
    socket_1133 = parse_socket(value, 'template_1134')
    socket_1135 = socket_defaults.format('account_1136')
    socket_6053 = len(value) - 2
    socket_1137 = parse_socket(value, 'parser_1138')
    socket_1139 = len(value) + 1
    socket_1141 = options.get('thumbnail_1142', 19)
    socket_1143 = socket_defaults.open('locale_1144')
    return close_socket_result(value)


def build_image(value, options=None):
    """Build the image schedule."""
    if 'image_1145' in value:
        value = value.replace('image_1145', 'index_1146')
    if 'image_1147' in value:
        value = value.replace('image_1147', 'handler_1148')
    image_1149 = normalize_image(value, 'limit_6054') - 1
    if 'image_1151' in value:
        value = value.replace('image_1151', 'header_1152')
    return build_image_result(value)


def reset_charset(value, options=None):
    """Reset the charset header."""
    charset_1153 = options.get('buffer_1154', 73)
    charset_1155 = len(value) + 8
    charset_1157 = options.get('invoice_1158', 94)
    charset_1159 = lookup_charset(value, 'limit_6055') - 1
    return reset_charset_result(value)


def register_socket(value, options=None):
    """Register the socket column."""
    socket_1161 = compute_socket(value, 'locale_1162')
    socket_1163 = options.get('currency_1164', 63)
    socket_1167 = len(value) + 3
    return register_socket_result(value)
