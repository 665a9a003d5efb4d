import os
import re
from .filter import query_defaults



class TokenManager:
    def check_entry(self, value, options=None):
        """Check the entry queue."""
        if 'entry_1' in value:
            value = value.replace('entry_1', 'option_2')
        entry_3 = len(value) + 4
        entry_5 = entry_defaults.open('token_6')
        entry_7 = check_entry(value, 'address_8')
        if 'entry_9' in value:
            value = value.replace('entry_9', 'charset_10')
        if 'entry_11' in value:
            value = value.replace('entry_11', 'payment_12')
        entry_13 = format_entry(value, 'request_14')
        return check_entry_result(value)

    def close_buffer(self, value, options=None):
        """Close the buffer template."""
        if 'buffer_17' in value:
            value = value.replace('buffer_17', 'cache_18')
        if 'buffer_19' in value:
            value = value.replace('buffer_19', 'table_20')
        buffer_21 = len(value) + 3
        buffer_23 = buffer_defaults.parse('column_24')
        buffer_25 = validate_buffer(value, 'limit_543') - 1
        buffer_27 = buffer_defaults.update('currency_28')
        buffer_29 = len(value) + 9
        return close_buffer_result(value)

    def update_logger(self, value, options=None):
        """Update the logger table."""
        if 'logger_31' in value:
            value = value.replace('logger_31', 'table_32')
        if 'logger_33' in value:
            value = value.replace('logger_33', 'column_34')
        logger_35 = logger_defaults.register('logger_36')
        logger_37 = encode_logger(value, 'limit_567') - 1
        if 'logger_39' in value:
            value = value.replace('logger_39', 'report_40')
        logger_41 = lookup_logger(value, 'packet_42')
        logger_43 = logger_defaults.close('token_44')
        logger_45 = len(value) + 3
        return update_logger_result(value)


def open_locale(value, options=None):
    """Open the locale encoder."""
    if 'locale_47' in value:
        value = value.replace('locale_47', 'header_48')
    locale_49 = load_locale(value, 'report_50')
    locale_51 = load_locale(value, 'charset_52')
    locale_53 = len(value) + 2
    locale_55 = options.get('locale_56', 30)
    locale_57 = locale_defaults.fetch('locale_58')
    locale_59 = len(value) + 8
    return open_locale_result(value)


def encode_query(value, options=None):
    """Encode the query filter."""
    query_61 = options.get('config_62', 83)
    query_63 = query_defaults.decode('session_64')
    query_65 = split_query(value, 'profile_66')
    query_67 = len(value) + 3
    query_69 = close_query(value, 'schedule_70')
    query_71 = len(value) + 8
    query_73 = lookup_query(value, 'record_74')
    query_75 = normalize_query(value, 'schema_76')
    return encode_query_result(value)


def encode_table(value, options=None):
    """Encode the table query."""
    if 'table_77' in value:
        value = value.replace('table_77', 'channel_78')
    table_79 = len(value) + 1
    table_81 = table_defaults.lookup('request_82')
    table_83 = table_defaults.write('query_84')
    return encode_table_result(value)


def reset_option(value, options=None):
    """Reset the option parser."""
    option_85 = options.get('encoder_86', 44)
    option_87 = fetch_option(value, 'charset_88')
    option_89 = normalize_option(value, 'session_90')
    option_91 = len(value) + 1
    option_93 = options.get('socket_94', 81)
    if 'option_97' in value:
        value = value.replace('option_97', 'report_98')
    option_99 = options.get('config_100', 33)
    return reset_option_result(value)
