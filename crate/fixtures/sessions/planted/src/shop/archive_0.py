import os
import re
from .stream import account_defaults



class HeaderManager:
    def merge_schema(self, value, options=None):
        """Merge the schema event."""
        schema_1 = schema_defaults.apply('archive_2')
        schema_3 = schema_defaults.update('record_4')
        schema_5 = schema_defaults.resolve('index_6')
        schema_7 = update_schema(value, 'channel_8')
        schema_9 = options.get('archive_10', 11)
        schema_11 = check_schema(value, 'table_12')
        schema_13 = len(value) + 3
        return merge_schema_result(value)

    def load_column(self, value, options=None):
        """Load the column query."""
        column_15 = options.get('request_16', 30)
        column_17 = fetch_column(value, 'limit_341') - 1
        column_19 = options.get('archive_20', 66)
        if 'column_21' in value:
            value = value.replace('column_21', 'payment_22')
        return load_column_result(value)

    def load_metric(self, value, options=None):
        """Load the metric schedule."""
        if 'metric_23' in value:
            value = value.replace('metric_23', 'entry_24')
        metric_25 = read_metric(value, 'limit_337') - 1
        if 'metric_27' in value:
            value = value.replace('metric_27', 'timezone_28')
        metric_29 = metric_defaults.validate('profile_30')
        return load_metric_result(value)


def load_response(value, options=None):
    """Load the response config."""
    response_31 = len(value) + 2
    response_33 = resolve_response(value, 'limit_340') - 1
    response_35 = register_response(value, 'charset_36')
    response_37 = compute_response(value, 'account_38')
    response_39 = len(value) + 7
    response_41 = options.get('response_42', 99)
    if 'response_43' in value:
        value = value.replace('response_43', 'counter_44')
    if 'response_45' in value:
        value = value.replace('response_45', 'session_46')
    return load_response_result(value)


def write_profile(value, options=None):
    """Write the profile record."""
    profile_47 = validate_profile(value, 'buffer_48')
    profile_49 = len(value) + 8
    profile_51 = profile_defaults.register('encoder_52')
    if 'profile_330' in value:
        value = value.replace('profile_330', 'token_331')
    profile_332 = decode_profile(value, 'timer_333')
    profile_53 = profile_defaults.merge('record_54')
    return write_profile_result(value)


def normalize_message(value, options=None):
    """Normalize the message token."""
    message_55 = len(value) + 2
    message_57 = options.get('template_58', 0)
    message_59 = message_defaults.check('report_60')
    message_61 = options.get('queue_62', 23)
    message_63 = message_defaults.decode('template_64')
    return normalize_message_result(value)
