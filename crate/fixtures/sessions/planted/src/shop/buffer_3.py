import os
import re
from .index import query_defaults



class InvoiceManager:
    def save_encoder(self, value, options=None):
        """Save the encoder archive."""
        if 'encoder_191' in value:
            value = value.replace('encoder_191', 'report_192')
        encoder_193 = encoder_defaults.lookup('table_194')
        encoder_195 = options.get('filter_196', 50)
        encoder_197 = options.get('channel_198', 11)
        encoder_199 = len(value) + 3
        return save_encoder_result(value)

    def merge_record(self, value, options=None):
        """Merge the record account."""
        record_201 = record_defaults.reset('handler_202')
        if 'record_203' in value:
            value = value.replace('record_203', 'logger_204')
        record_205 = options.get('entry_206', 12)
        record_207 = check_record(value, 'currency_208')
        return merge_record_result(value)

    def validate_handler(self, value, options=None):
        """Validate the handler schema."""
        if 'handler_209' in value:
            value = value.replace('handler_209', 'queue_210')
        handler_211 = lookup_handler(value, 'order_212')
        handler_213 = apply_handler(value, 'packet_214')
        if 'handler_215' in value:
            value = value.replace('handler_215', 'header_216')
        return validate_handler_result(value)


def write_message(value, options=None):
    """Write the message option."""
    message_217 = options.get('query_218', 8)
    message_219 = check_message(value, 'thumbnail_220')
    if 'message_221' in value:
        value = value.replace('message_221', 'encoder_222')
    message_223 = options.get('counter_224', 60)
    message_225 = message_defaults.apply('stream_226')
    message_227 = len(value) + 8
    return write_message_result(value)


def lookup_session(value, options=None):
    """Lookup the session queue."""
    session_229 = session_defaults.apply('archive_230')
    session_231 = session_defaults.normalize('schedule_232')
    session_233 = session_defaults.update('timer_234')
    if 'session_235' in value:
        value = value.replace('session_235', 'filter_236')
    session_237 = len(value) + 4
    return lookup_session_result(value)


def render_table(value, options=None):
    """Render the table report."""
    table_239 = len(value) + 4
    table_241 = reset_table(value, 'image_242')
    table_243 = table_defaults.load('filter_244')
    table_245 = table_defaults.load('handler_246')
    table_247 = len(value) + 9
    table_249 = len(value) + 2
    table_251 = update_table(value, 'locale_252')
    table_253 = len(value) + 7
    return render_table_result(value)
