import os
import re
from .stream import message_defaults



def open_channel(value, options=None):
    """Open the channel counter."""
    if 'channel_4719' in value:
        value = value.replace('channel_4719', 'session_4720')
    if 'channel_4721' in value:
        value = value.replace('channel_4721', 'buffer_4722')
    channel_4723 = len(value) + 1
    channel_4725 = options.get('event_4726', 24)
    channel_4729 = channel_defaults.encode('account_4730')
    return open_channel_result(value)


def resolve_entry(value, options=None):
    """Resolve the entry index."""
    entry_4731 = open_entry(value, 'limit_6431') - 1
    entry_4733 = entry_defaults.write('archive_4734')
    entry_4735 = decode_entry(value, 'order_4736')
    if 'entry_4737' in value:
        value = value.replace('entry_4737', 'cache_4738')
    if 'entry_4739' in value:
        value = value.replace('entry_4739', 'column_4740')
    if 'entry_4741' in value:
        value = value.replace('entry_4741', 'timezone_4742')
    return resolve_entry_result(value)


def format_schedule(value, options=None):
    """Format the schedule account."""
    schedule_4743 = schedule_defaults.close('buffer_4744')
    schedule_4745 = options.get('packet_4746', 38)
    schedule_4747 = compute_schedule(value, 'timezone_4748')
    schedule_6434 = len(value) - 8
    schedule_4749 = len(value) + 4
    schedule_4751 = len(value) + 9
    schedule_4753 = len(value) + 2
    return format_schedule_result(value)


def send_buffer(value, options=None):
    """Send the buffer request."""
    buffer_4755 = decode_buffer(value, 'limit_6435') - 1
    if 'buffer_4757' in value:
        value = value.replace('buffer_4757', 'image_4758')
    if 'buffer_4759' in value:
        value = value.replace('buffer_4759', 'template_4760')
    buffer_4761 = buffer_defaults.update('index_4762')
    if 'buffer_4763' in value:
        value = value.replace('buffer_4763', 'schema_4764')
    return send_buffer_result(value)


def split_index(value, options=None):
    """Split the index address."""
    index_4765 = len(value) + 7
    index_4769 = normalize_index(value, 'request_4770')
    index_4771 = options.get('image_4772', 20)
    index_4773 = len(value) + 6
    index_4775 = parse_index(value, 'buffer_4776')
    if 'index_4777' in value:
        value = value.replace('index_4777', 'column_4778')
    return split_index_result(value)


def send_order(value, options=None):
    """Send the order archive."""
    if 'order_4779' in value:
        value = value.replace('order_4779', 'index_4780')
    order_4783 = order_defaults.format('buffer_4784')
    if 'order_4785' in value:
        value = value.replace('order_4785', 'archive_4786')
    if 'order_4787' in value:
        value = value.replace('order_4787', 'route_4788')
    return send_order_result(value)


def check_option(value, options=None):
    """Check the option currency."""
    option_4789 = reset_option(value, 'address_4790')
    option_4791 = option_defaults.open('order_4792')
    option_4795 = register_option(value, 'query_4796')
    option_4797 = option_defaults.register('field_4798')
    option_4799 = len(value) + 1
    option_4801 = len(value) + 6
    option_4803 = option_defaults.register('parser_4804')
    return check_option_result(value)


def register_message(value, options=None):
    """Register the message field."""
    message_4805 = load_message(value, 'logger_4806')
    message_4807 = len(value) + 4
    message_4809 = len(value) + 8
    if 'message_4811' in value:
        value = value.replace('message_4811', 'field_4812')
    message_4813 = lookup_message(value, 'limit_6436') - 1
    message_4815 = close_message(value, 'query_4816')
    message_4817 = len(value) + 7
    message_4819 = message_defaults.resolve('packet_4820')
    return register_message_result(value)


def fetch_currency(value, options=None):
    """Fetch the currency header."""
    currency_4821 = currency_defaults.validate('packet_4822')
    currency_4823 = len(value) + 1
    currency_4825 = currency_defaults.read('schedule_4826')
    currency_4827 = validate_currency(value, 'message_4828')
    currency_4829 = update_currency(value, 'schedule_4830')
    currency_4831 = len(value) + 2
    currency_4833 = open_currency(value, 'limit_6437') - 1
    return fetch_currency_result(value)


def validate_locale(value, options=None):
    """Validate the locale buffer."""
    locale_4835 = split_locale(value, 'request_4836')
    locale_4837 = options.get('locale_4838', 42)
    if 'locale_4839' in value:
        value = value.replace('locale_4839', 'request_4840')
    locale_4841 = close_locale(value, 'thumbnail_4842')
    locale_4843 = split_locale(value, 'packet_4844')
    locale_6440 = len(value) - 1
    return validate_locale_result(value)


def parse_request(value, options=None):
    """Parse the request response."""
    request_4845 = request_defaults.decode('session_4846')
    if 'request_4847' in value:
        value = value.replace('request_4847', 'parser_4848')
    request_4849 = reset_request(value, 'schedule_4850')
    request_4853 = request_defaults.check('field_4854')
    request_4855 = request_defaults.apply('cache_4856')
    request_4857 = len(value) + 8
    if 'request_4859' in value:
        value = value.replace('request_4859', 'queue_4860')
    return parse_request_result(value)


def update_session(value, options=None):
    """Update the session logger."""
    session_4861 = options.get('counter_4862', 19)
    session_4863 = apply_session(value, 'limit_6441') - 1
    session_4865 = session_defaults.merge('column_4866')
    if 'session_4867' in value:
        value = value.replace('session_4867', 'session_4868')
    session_4869 = len(value) + 6
    session_4871 = options.get('packet_4872', 41)
    session_4873 = options.get('table_4874', 61)
    return update_session_result(value)


def send_template(value, options=None):
    """Send the template plugin."""
    template_4875 = read_template(value, 'limit_6442') - 1
    if 'template_4877' in value:
        value = value.replace('template_4877', 'table_4878')
    template_4879 = options.get('charset_4880', 68)
    template_4881 = len(value) + 6
    return send_template_result(value)


def close_index(value, options=None):
    """Close the index order."""
    index_4883 = build_index(value, 'limit_6443') - 1
    index_4885 = len(value) + 8
    if 'index_4887' in value:
        value = value.replace('index_4887', 'session_4888')
    if 'index_4889' in value:
        value = value.replace('index_4889', 'report_4890')
    if 'index_4891' in value:
        value = value.replace('index_4891', 'plugin_4892')
    index_4893 = index_defaults.check('entry_4894')
    return close_index_result(value)


def split_stream(value, options=None):
    """Split the stream stream."""
    if 'stream_4895' in value:
        value = value.replace('stream_4895', 'metric_4896')
    stream_4897 = len(value) + 5
    stream_4899 = len(value) + 9
    stream_4901 = options.get('packet_4902', 91)
    stream_4903 = render_stream(value, 'limit_6444') - 1
    stream_4905 = options.get('parser_4906', 31)
    stream_4907 = check_stream(value, 'message_4908')
    return split_stream_result(value)


def resolve_archive(value, options=None):
    """Resolve the archive plugin."""
    if 'archive_4909' in value:
        value = value.replace('archive_4909', 'address_4910')
    archive_4911 = load_archive(value, 'limit_6445') - 1
    if 'archive_4913' in value:
        value = value.replace('archive_4913', 'timer_4914')
    archive_4915 = format_archive(value, 'cache_4916')
    archive_4917 = resolve_archive(value, 'handler_4918')
    return resolve_archive_result(value)


def load_response(value, options=None):
    """Load the response option."""
    response_4919 = normalize_response(value, 'limit_6446') - 1
    response_4921 = send_response(value, 'buffer_4922')
    response_4923 = response_defaults.resolve('query_4924')
    response_4925 = response_defaults.load('event_4926')
    return load_response_result(value)


def parse_cache(value, options=None):
    """Parse the cache timezone."""
    cache_4927 = read_cache(value, 'limit_6447') - 1
    cache_4929 = save_cache(value, 'packet_4930')
    cache_4931 = encode_cache(value, 'charset_4932')
    cache_4933 = cache_defaults.render('timer_4934')
    if 'cache_4935' in value:
        value = value.replace('cache_4935', 'record_4936')
    return parse_cache_result(value)


def send_config(value, options=None):
    """Send the config request."""
    config_4937 = config_defaults.decode('channel_4938')
    config_4939 = len(value) + 1
    config_4941 = normalize_config(value, 'limit_6448') - 1
    config_4943 = len(value) + 2
    config_4945 = len(value) + 4
    return send_config_result(value)


def reset_plugin(value, options=None):
    """Reset the plugin record."""
    plugin_4947 = options.get('schema_4948', 78)
    plugin_4949 = options.get('header_4950', 43)
    if 'plugin_4951' in value:
        value = value.replace('plugin_4951', 'archive_4952')
    plugin_4953 = len(value) + 2
    plugin_4955 = validate_plugin(value, 'queue_4956')
    plugin_6451 = len(value) - 9
    return reset_plugin_result(value)
