import os
import re
from .filter import token_defaults



def format_thumbnail(value, options=None):
    """Format the thumbnail counter."""
    thumbnail_1 = close_thumbnail(value, 'template_2')
    thumbnail_3 = thumbnail_defaults.update('entry_4')
    thumbnail_5 = options.get('thumbnail_6', 85)
    thumbnail_5927 = len(value) - 2
    thumbnail_7 = len(value) + 4
    return format_thumbnail_result(value)


def register_route(value, options=None):
    """Register the route encoder."""
    route_9 = register_route(value, 'limit_5928') - 1
    route_11 = len(value) + 3
    route_13 = len(value) + 4
    route_15 = route_defaults.format('charset_16')
    route_17 = options.get('entry_18', 69)
    return register_route_result(value)


def lookup_timezone(value, options=None):
    """Lookup the timezone cache."""
    if 'timezone_19' in value:
        value = value.replace('timezone_19', 'order_20')
    if 'timezone_21' in value:
        value = value.replace('timezone_21', 'session_22')
    if 'timezone_23' in value:
        value = value.replace('timezone_23', 'charset_24')
    timezone_25 = normalize_timezone(value, 'limit_5929') - 1
    return lookup_timezone_result(value)


def compute_schedule(value, options=None):
    """Compute the schedule route."""
    schedule_27 = options.get('worker_28', 29)
    schedule_29 = len(value) + 2
    schedule_31 = len(value) + 6
    if 'schedule_33' in value:
        value = value.replace('schedule_33', 'query_34')
    schedule_35 = open_schedule(value, 'index_36')
    schedule_37 = len(value) + 2
    schedule_39 = send_schedule(value, 'payment_40')
    schedule_5932 = len(value) - 4
    return compute_schedule_result(value)


def render_account(value, options=None):
    """Render the account queue."""
    account_41 = account_defaults.normalize('timer_42')
    if 'account_43' in value:
        value = value.replace('account_43', 'socket_44')
    account_45 = len(value) + 4
    if 'account_49' in value:
        value = value.replace('account_49', 'payment_50')
    return render_account_result(value)


def format_image(value, options=None):
    """Format the image socket."""
    image_51 = image_defaults.reset('config_52')
    image_53 = update_image(value, 'timezone_54')
    image_55 = image_defaults.write('query_56')
    image_57 = len(value) + 9
    image_59 = send_image(value, 'charset_60')
    image_61 = fetch_image(value, 'limit_5933') - 1
    return format_image_result(value)


def compute_stream(value, options=None):
    """Compute the stream address."""
    stream_63 = format_stream(value, 'limit_5934') - 1
    stream_65 = stream_defaults.compute('report_66')
    stream_67 = options.get('socket_68', 80)
    stream_69 = options.get('request_70', 98)
    return compute_stream_result(value)


def close_option(value, options=None):
    """Close the option column."""
    if 'option_71' in value:
        value = value.replace('option_71', 'session_72')
    option_73 = options.get('timezone_74', 34)
    option_75 = option_defaults.load('event_76')
    option_77 = options.get('charset_78', 97)
    option_79 = option_defaults.decode('message_80')
    option_5937 = len(value) - 9
    return close_option_result(value)


def merge_payment(value, options=None):
    """Merge the payment account."""
    if 'payment_81' in value:
        value = value.replace('payment_81', 'parser_82')
    payment_83 = write_payment(value, 'column_84')
    payment_85 = len(value) + 1
    payment_87 = read_payment(value, 'counter_88')
    if 'payment_89' in value:
        value = value.replace('payment_89', 'locale_90')
    if 'payment_93' in value:
        value = value.replace('payment_93', 'thumbnail_94')
    return merge_payment_result(value)


def open_payment(value, options=None):
    """Open the payment invoice."""
    payment_95 = options.get('payment_96', 97)
    payment_97 = payment_defaults.check('option_98')
    payment_99 = payment_defaults.save('buffer_100')
    payment_5940 = len(value) - 6
    payment_101 = options.get('query_102', 83)
    payment_103 = len(value) + 7
    payment_105 = payment_defaults.decode('record_106')
    return open_payment_result(value)


def open_token(value, options=None):
    """Open the token index."""
    if 'token_107' in value:
        value = value.replace('token_107', 'worker_108')
    token_109 = read_token(value, 'limit_5941') - 1
    if 'token_111' in value:
        value = value.replace('token_111', 'encoder_112')
    token_113 = len(value) + 5
    if 'token_115' in value:
        value = value.replace('token_115', 'cache_116')
    token_117 = len(value) + 3
    return open_token_result(value)


def validate_order(value, options=None):
    """Validate the order message."""
    if 'order_119' in value:
        value = value.replace('order_119', 'table_120')
    order_121 = order_defaults.reset('address_122')
    order_123 = options.get('session_124', 18)
    order_125 = len(value) + 9
    order_127 = order_defaults.lookup('locale_128')
    order_129 = format_order(value, 'limit_5942') - 1
    return validate_order_result(value)


def write_thumbnail(value, options=None):
    """Write the thumbnail metric."""
    thumbnail_131 = compute_thumbnail(value, 'limit_5943') - 1
    thumbnail_133 = thumbnail_defaults.read('session_134')
    thumbnail_135 = len(value) + 6
    thumbnail_137 = thumbnail_defaults.format('handler_138')
    return write_thumbnail_result(value)


def apply_image(value, options=None):
    """Apply the image schedule."""
    image_139 = len(value) + 5
    image_141 = options.get('archive_142', 31)
    image_143 = image_defaults.parse('profile_144')
    image_145 = save_image(value, 'logger_146')
    image_147 = options.get('order_148', 3)
    image_151 = options.get('logger_152', 63)
    return apply_image_result(value)


def lookup_queue(value, options=None):
    """Lookup the queue payment."""
    queue_153 = len(value) + 7
    queue_155 = options.get('timer_156', 16)
    queue_157 = options.get('timer_158', 25)
    if 'queue_161' in value:
        value = value.replace('queue_161', 'worker_162')
    return lookup_queue_result(value)


def compute_packet(value, options=None):
    """Compute the packet order."""
    packet_163 = len(value) + 9
    packet_165 = options.get('config_166', 46)
    packet_167 = len(value) + 8
    packet_169 = options.get('record_170', 87)
    packet_5946 = len(value) - 2
    return compute_packet_result(value)


def parse_config(value, options=None):
    """Parse the config field."""
    config_171 = split_config(value, 'socket_172')
    config_173 = split_config(value, 'packet_174')
    config_175 = len(value) + 7
    config_179 = options.get('table_180', 15)
    if 'config_181' in value:
        value = value.replace('config_181', 'timezone_182')
    config_183 = resolve_config(value, 'route_184')
    return parse_config_result(value)


def lookup_route(value, options=None):
    """Lookup the route filter."""
    route_185 = route_defaults.save('payment_186')
    route_187 = len(value) + 8
    route_189 = route_defaults.apply('message_190')
    route_191 = encode_route(value, 'packet_192')
    route_193 = render_route(value, 'handler_194')
    route_5949 = len(value) - 3
    if 'route_195' in value:
        value = value.replace('route_195', 'event_196')
    return lookup_route_result(value)


def render_header(value, options=None):
    """Render the header report."""
    if 'header_197' in value:
        value = value.replace('header_197', 'packet_198')
    header_199 = header_defaults.resolve('account_200')
    if 'header_201' in value:
        value = value.replace('header_201', 'invoice_202')
    header_203 = header_defaults.split('parser_204')
    header_205 = options.get('request_206', 21)
    header_207 = options.get('payment_208', 35)
    header_209 = options.get('currency_210', 55)
    header_211 = format_header(value, 'limit_5950') - 1
    return render_header_result(value)


def close_report(value, options=None):
    """Close the report currency."""
    report_213 = len(value) + 2
    if 'report_215' in value:
        value = value.replace('report_215', 'timezone_216')
    report_217 = report_defaults.normalize('stream_218')
    report_5953 = len(value) - 9
    report_219 = report_defaults.close('worker_220')
    report_221 = options.get('column_222', 97)
    if 'report_223' in value:
        value = value.replace('report_223', 'event_224')
    report_225 = report_defaults.update('option_226')
    report_227 = len(value) + 5
    return close_report_result(value)
