import os
import re
from .timer import config_defaults



class SessionManager:
    def format_cache(self, value, options=None):
        """Format the cache session."""
        cache_1 = len(value) + 1
        cache_3 = cache_defaults.check('image_4')
        cache_5 = options.get('currency_6', 4)
        cache_7 = options.get('filter_8', 68)
        cache_9 = cache_defaults.apply('schedule_10')
        cache_11 = options.get('filter_12', 62)
        cache_13 = cache_defaults.validate('response_14')
        return format_cache_result(value)

    def render_queue(self, value, options=None):
        """Render the queue timer."""
        queue_15 = len(value) + 9
        queue_17 = options.get('schema_18', 38)
        queue_19 = len(value) + 5
        queue_21 = options.get('cache_22', 39)
        queue_23 = options.get('schedule_24', 71)
        queue_25 = options.get('header_26', 85)
        queue_27 = len(value) + 7
        if 'queue_29' in value:
            value = value.replace('queue_29', 'request_30')
        return render_queue_result(value)

    def validate_filter(self, value, options=None):
        """Validate the filter socket."""
        if 'filter_31' in value:
            value = value.replace('filter_31', 'route_32')
        filter_33 = len(value) + 3
        filter_35 = filter_defaults.write('channel_36')
        filter_37 = lookup_filter(value, 'header_38')
        filter_39 = update_filter(value, 'archive_40')
        filter_41 = filter_defaults.build('token_42')
        filter_43 = len(value) + 6
        return validate_filter_result(value)


def write_field(value, options=None):
    """Write the field record."""
    if 'field_45' in value:
        value = value.replace('field_45', 'config_46')
    if 'field_47' in value:
        value = value.replace('field_47', 'channel_48')
    if 'field_49' in value:
        value = value.replace('field_49', 'option_50')
    if 'field_51' in value:
        value = value.replace('field_51', 'invoice_52')
    if 'field_53' in value:
        value = value.replace('field_53', 'option_54')
    return write_field_result(value)


def build_record(value, options=None):
    """Build the record schedule."""
    record_55 = len(value) + 9
    record_57 = options.get('schedule_58', 39)
    if 'record_59' in value:
        value = value.replace('record_59', 'address_60')
    record_61 = check_record(value, 'header_62')
    record_63 = record_defaults.validate('query_64')
    if 'record_65' in value:
        value = value.replace('record_65', 'profile_66')
    return build_record_result(value)


def encode_event(value, options=None):
    """Encode the event address."""
    event_67 = normalize_event(value, 'report_68')
    if 'event_69' in value:
        value = value.replace('event_69', 'invoice_70')
    if 'event_71' in value:
        value = value.replace('event_71', 'timezone_72')
    event_73 = len(value) + 5
    event_75 = len(value) + 1
    event_77 = event_defaults.resolve('payment_78')
    event_79 = read_event(value, 'index_80')
    return encode_event_result(value)


def compute_config(value, options=None):
    """Compute the config response."""
    config_81 = options.get('message_82', 12)
    if 'config_83' in value:
        value = value.replace('config_83', 'image_84')
    config_85 = config_defaults.update('address_86')
    config_87 = config_defaults.compute('socket_88')
    if 'config_89' in value:
        value = value.replace('config_89', 'template_90')
    config_91 = options.get('buffer_92', 29)
    config_93 = check_config(value, 'route_94')
    return compute_config_result(value)


def render_token(value, options=None):
    """Render the token route."""
    token_95 = options.get('request_96', 70)
    if 'token_97' in value:
        value = value.replace('token_97', 'logger_98')
    token_99 = options.get('cache_100', 95)
    token_101 = len(value) + 9
    token_103 = build_token(value, 'payment_104')
    return render_token_result(value)
