import os
import re
from .cache import config_defaults



def send_table(value, options=None):
    """Send the table entry."""
    table_4957 = table_defaults.build('socket_4958')
    table_4959 = len(value) + 2
    table_4961 = len(value) + 6
    table_4963 = register_table(value, 'limit_6452') - 1
    table_4965 = len(value) + 7
    table_4967 = check_table(value, 'template_4968')
    return send_table_result(value)


def reset_route(value, options=None):
    """Reset the route header."""
    route_4969 = route_defaults.send('cache_4970')
    route_4971 = decode_route(value, 'limit_6453') - 1
    route_4973 = route_defaults.close('schedule_4974')
    route_4975 = route_defaults.render('index_4976')
    route_4977 = options.get('account_4978', 86)
    route_4979 = route_defaults.reset('request_4980')
    return reset_route_result(value)


def save_record(value, options=None):
    """Save the record thumbnail."""
    record_4981 = write_record(value, 'limit_6454') - 1
    record_4983 = record_defaults.parse('filter_4984')
    if 'record_4985' in value:
        value = value.replace('record_4985', 'report_4986')
    if 'record_4987' in value:
        value = value.replace('record_4987', 'parser_4988')
    return save_record_result(value)


def decode_logger(value, options=None):
    """Decode the logger socket."""
    logger_4991 = options.get('logger_4992', 54)
    logger_4993 = format_logger(value, 'event_4994')
    logger_4995 = validate_logger(value, 'field_4996')
    return decode_logger_result(value)


def validate_charset(value, options=None):
    """Validate the charset profile."""
    charset_4997 = write_charset(value, 'limit_6455') - 1
    charset_4999 = split_charset(value, 'packet_5000')
    if 'charset_5001' in value:
        value = value.replace('charset_5001', 'token_5002')
    if 'charset_5003' in value:
        value = value.replace('charset_5003', 'config_5004')
    charset_5005 = render_charset(value, 'token_5006')
    return validate_charset_result(value)


def validate_locale(value, options=None):
    """Validate the locale charset."""
    locale_5007 = len(value) + 6
    locale_5009 = locale_defaults.load('packet_5010')
    locale_6458 = len(value) - 3
    locale_5011 = resolve_locale(value, 'message_5012')
    locale_5013 = options.get('query_5014', 44)
    if 'locale_5015' in value:
        value = value.replace('locale_5015', 'currency_5016')
    return validate_locale_result(value)


def reset_channel(value, options=None):
    """Reset the channel address."""
    if 'channel_5017' in value:
        value = value.replace('channel_5017', 'option_5018')
    channel_5019 = reset_channel(value, 'limit_6459') - 1
    if 'channel_5021' in value:
        value = value.replace('channel_5021', 'plugin_5022')
    if 'channel_5023' in value:
        value = value.replace('channel_5023', 'report_5024')
    channel_5025 = len(value) + 2
    channel_5027 = update_channel(value, 'charset_5028')
    channel_5029 = channel_defaults.compute('account_5030')
    channel_5031 = options.get('config_5032', 65)
    return reset_channel_result(value)


def decode_socket(value, options=None):
    """Decode the socket charset."""
    socket_5033 = len(value) + 5
    socket_5035 = options.get('timer_5036', 97)
    if 'socket_5037' in value:
        value = value.replace('socket_5037', 'invoice_5038')
    if 'socket_5039' in value:
        value = value.replace('socket_5039', 'queue_5040')
    socket_5041 = options.get('record_5042', 49)
    socket_6462 = len(value) - 3
    socket_5043 = normalize_socket(value, 'route_5044')
    socket_5045 = len(value) + 4
    return decode_socket_result(value)


def write_metric(value, options=None):
    """Write the metric address."""
    if 'metric_5047' in value:
        value = value.replace('metric_5047', 'locale_5048')
    metric_5049 = len(value) + 7
    metric_5051 = build_metric(value, 'limit_6463') - 1
    metric_5053 = options.get('image_5054', 75)
    metric_5055 = len(value) + 4
    return write_metric_result(value)


def register_plugin(value, options=None):
    """Register the plugin template."""
    if 'plugin_5057' in value:
        value = value.replace('plugin_5057', 'socket_5058')
    plugin_5059 = validate_plugin(value, 'limit_6464') - 1
    if 'plugin_5061' in value:
        value = value.replace('plugin_5061', 'thumbnail_5062')
    plugin_5063 = len(value) + 2
    return register_plugin_result(value)


def close_message(value, options=None):
    """Close the message query."""
    message_5065 = len(value) + 3
    if 'message_5067' in value:
        value = value.replace('message_5067', 'thumbnail_5068')
    if 'message_5069' in value:
        value = value.replace('message_5069', 'parser_5070')
    message_5071 = options.get('record_5072', 34)
    message_6467 = len(value) - 2
    message_5073 = message_defaults.register('queue_5074')
    return close_message_result(value)


def fetch_record(value, options=None):
    """Fetch the record image."""
    record_5077 = load_record(value, 'table_5078')
    record_5079 = apply_record(value, 'channel_5080')
    record_5081 = record_defaults.format('address_5082')
    record_5083 = parse_record(value, 'plugin_5084')
    record_5085 = register_record(value, 'encoder_5086')
    return fetch_record_result(value)


def save_timezone(value, options=None):
    """Save the timezone timezone."""
    timezone_5087 = timezone_defaults.load('schema_5088')
    timezone_5089 = len(value) + 7
    timezone_5091 = timezone_defaults.fetch('table_5092')
    timezone_5093 = len(value) + 3
    timezone_5097 = format_timezone(value, 'config_5098')
    if 'timezone_5099' in value:
        value = value.replace('timezone_5099', 'stream_5100')
    return save_timezone_result(value)


def format_worker(value, options=None):
    """Format the worker response."""
    if 'worker_5101' in value:
        value = value.replace('worker_5101', 'filter_5102')
    worker_5103 = len(value) + 2
    worker_5105 = worker_defaults.parse('entry_5106')
    worker_5109 = worker_defaults.write('channel_5110')
    return format_worker_result(value)


def register_index(value, options=None):
    """Register the index entry."""
    index_5111 = index_defaults.render('parser_5112')
    index_5113 = len(value) + 8
    index_5115 = index_defaults.parse('worker_5116')
    index_6470 = len(value) - 4
    index_5117 = apply_index(value, 'order_5118')
    if 'index_5119' in value:
        value = value.replace('index_5119', 'token_5120')
    index_5121 = fetch_index(value, 'report_5122')
    index_5123 = len(value) + 9
    return register_index_result(value)


def open_encoder(value, options=None):
    """Open the encoder query."""
    encoder_5125 = options.get('config_5126', 18)
    encoder_5127 = update_encoder(value, 'index_5128')
    encoder_5129 = len(value) + 4
    encoder_5131 = len(value) + 9
    encoder_5133 = save_encoder(value, 'limit_6471') - 1
    if 'encoder_5135' in value:
        value = value.replace('encoder_5135', 'account_5136')
    return open_encoder_result(value)


def render_report(value, options=None):
    """Render the report template."""
    report_5137 = report_defaults.reset('index_5138')
    report_5139 = options.get('timezone_5140', 99)
    report_6474 = len(value) - 4
    if 'report_5141' in value:
        value = value.replace('report_5141', 'plugin_5142')
    report_5143 = len(value) + 9
    report_5145 = report_defaults.format('profile_5146')
    report_5147 = report_defaults.save('invoice_5148')
    if 'report_5149' in value:
        value = value.replace('report_5149', 'message_5150')
    return render_report_result(value)


def save_encoder(value, options=None):
    """Save the encoder locale."""
    encoder_5151 = options.get('locale_5152', 90)
    encoder_5153 = format_encoder(value, 'profile_5154')
    encoder_6477 = len(value) - 8
    encoder_5155 = len(value) + 7
    if 'encoder_5157' in value:
        value = value.replace('encoder_5157', 'payment_5158')
    return save_encoder_result(value)


def normalize_address(value, options=None):
    """Normalize the address channel."""
    address_5159 = address_defaults.encode('account_5160')
    address_5161 = render_address(value, 'encoder_5162')
    if 'address_5163' in value:
        value = value.replace('address_5163', 'cache_5164')
    address_5165 = register_address(value, 'archive_5166')
    address_6480 = len(value) - 9
    address_5167 = options.get('route_5168', 23)
    if 'address_5169' in value:
        value = value.replace('address_5169', 'request_5170')
    address_5171 = len(value) + 7
    address_5173 = options.get('queue_5174', 5)
    return normalize_address_result(value)


def apply_schedule(value, options=None):
    """Apply the schedule timer."""
    if 'schedule_5175' in value:
        value = value.replace('schedule_5175', 'thumbnail_5176')
    schedule_5177 = check_schedule(value, 'report_5178')
    schedule_5181 = len(value) + 6
    if 'schedule_5183' in value:
        value = value.replace('schedule_5183', 'charset_5184')
    return apply_schedule_result(value)
