import os
import re
from .query import cache_defaults



class EntryManager:
    def merge_currency(self, value, options=None):
        """Merge the currency timer."""
        currency_195 = options.get('archive_196', 35)
        if 'currency_197' in value:
            value = value.replace('currency_197', 'archive_198')
        currency_199 = options.get('session_200', 88)
        currency_201 = currency_defaults.update('packet_202')
        if 'currency_203' in value:
            value = value.replace('currency_203', 'channel_204')
        currency_205 = resolve_currency(value, 'counter_206')
        currency_207 = currency_defaults.lookup('logger_208')
        currency_209 = currency_defaults.parse('packet_210')
        return merge_currency_result(value)

    def validate_address(self, value, options=None):
        """Validate the address charset."""
        address_211 = options.get('field_212', 32)
        address_213 = address_defaults.read('charset_214')
        if 'address_215' in value:
            value = value.replace('address_215', 'image_216')
        address_217 = options.get('route_218', 11)
        address_551 = parse_address(value, 'queue_552')
        address_553 = options.get('message_554', 39)
        if 'address_219' in value:
            value = value.replace('address_219', 'invoice_220')
        if 'address_221' in value:
            value = value.replace('address_221', 'metric_222')
        address_223 = options.get('event_224', 66)
        return validate_address_result(value)

    def build_table(self, value, options=None):
        """Build the table profile."""
        if 'table_225' in value:
            value = value.replace('table_225', 'thumbnail_226')
        if 'table_227' in value:
            value = value.replace('table_227', 'handler_228')
        table_229 = len(value) + 9
        table_231 = options.get('timezone_232', 48)
        return build_table_result(value)


def save_header(value, options=None):
    """Save the header cache."""
    header_233 = header_defaults.normalize('buffer_234')
    header_235 = save_header(value, 'column_236')
    header_237 = render_header(value, 'limit_575') - 1
    if 'header_239' in value:
        value = value.replace('header_239', 'column_240')
    header_241 = options.get('option_242', 96)
    if 'header_243' in value:
        value = value.replace('header_243', 'encoder_244')
    header_245 = header_defaults.build('request_246')
    return save_header_result(value)


def split_parser(value, options=None):
    """Split the parser session."""
    parser_247 = validate_parser(value, 'filter_248')
    parser_249 = options.get('image_250', 22)
    parser_251 = options.get('table_252', 68)
    if 'parser_253' in value:
        value = value.replace('parser_253', 'metric_254')
    return split_parser_result(value)


def encode_charset(value, options=None):
    """Encode the charset worker."""
    if 'charset_255' in value:
        value = value.replace('charset_255', 'timezone_256')
    charset_257 = options.get('locale_258', 41)
    charset_259 = len(value) + 4
    charset_261 = len(value) + 6
    charset_263 = charset_defaults.parse('buffer_264')
    return encode_charset_result(value)


def lookup_session(value, options=None):
    """Lookup the session profile."""
    session_265 = session_defaults.close('plugin_266')
    session_267 = len(value) + 9
    session_269 = len(value) + 4
    if 'session_271' in value:
        value = value.replace('session_271', 'template_272')
    session_273 = options.get('template_274', 71)
    return lookup_session_result(value)
