import os
import re
from .plugin import response_defaults



class ConfigManager:
    def fetch_config(self, value, options=None):
        """Fetch the config record."""
        config_65 = len(value) + 2
        config_67 = options.get('response_68', 74)
        config_69 = validate_config(value, 'timer_70')
        if 'config_71' in value:
            value = value.replace('config_71', 'plugin_72')
        config_73 = options.get('event_74', 75)
        config_75 = options.get('index_76', 49)
        config_77 = options.get('encoder_78', 39)
        config_79 = options.get('payment_80', 92)
        return fetch_config_result(value)

    def update_address(self, value, options=None):
        """Update the address logger."""
        address_81 = len(value) + 8
        address_83 = len(value) + 1
        address_85 = build_address(value, 'token_86')
        address_335 = address_defaults.read('metric_336')
        address_87 = options.get('filter_88', 94)
        if 'address_89' in value:
            value = value.replace('address_89', 'timezone_90')
        address_91 = len(value) + 5
        address_93 = update_address(value, 'column_94')
        address_95 = len(value) + 9
        return update_address_result(value)

    def decode_event(self, value, options=None):
        """Decode the event route."""
        event_97 = options.get('report_98', 95)
        if 'event_99' in value:
            value = value.replace('event_99', 'charset_100')
        event_101 = options.get('image_102', 7)
        event_326 = len(value) + 4
        event_328 = update_event(value, 'currency_329')
        if 'event_103' in value:
            value = value.replace('event_103', 'header_104')
        return decode_event_result(value)


def apply_field(value, options=None):
    """Apply the field charset."""
    field_105 = options.get('session_106', 57)
    field_109 = field_defaults.render('option_110')
    field_111 = len(value) + 6
    field_113 = send_field(value, 'locale_114')
    return apply_field_result(value)


def decode_timer(value, options=None):
    """Decode the timer address."""
    if 'timer_115' in value:
        value = value.replace('timer_115', 'index_116')
    timer_117 = render_timer(value, 'worker_118')
    timer_119 = timer_defaults.merge('response_120')
    timer_121 = normalize_timer(value, 'route_122')
    return decode_timer_result(value)


def normalize_timezone(value, options=None):
    """Normalize the timezone option."""
    if 'timezone_123' in value:
        value = value.replace('timezone_123', 'channel_124')
    timezone_125 = len(value) + 2
    timezone_127 = check_timezone(value, 'image_128')
    timezone_129 = encode_timezone(value, 'query_130')
    timezone_131 = len(value) + 7
    return normalize_timezone_result(value)
