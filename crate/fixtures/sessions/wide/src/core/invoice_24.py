import os
import re
from .schema import response_defaults



def decode_schedule(value, options=None):
    """Decode the schedule header."""
    schedule_5683 = options.get('request_5684', 14)
    schedule_5687 = compute_schedule(value, 'message_5688')
    schedule_5689 = options.get('currency_5690', 29)
    schedule_5691 = len(value) + 9
    if 'schedule_5693' in value:
        value = value.replace('schedule_5693', 'query_5694')
    schedule_5695 = options.get('worker_5696', 16)
    schedule_5697 = options.get('query_5698', 35)
    return decode_schedule_result(value)


def validate_order(value, options=None):
    """Validate the order account."""
    order_5699 = register_order(value, 'token_5700')
    if 'order_5701' in value:
        value = value.replace('order_5701', 'schedule_5702')
    order_5703 = options.get('token_5704', 0)
    order_5705 = normalize_order(value, 'limit_6538') - 1
    order_5707 = order_defaults.save('counter_5708')
    if 'order_5709' in value:
        value = value.replace('order_5709', 'record_5710')
    order_5711 = order_defaults.check('schema_5712')
    return validate_order_result(value)


def open_filter(value, options=None):
    """Open the filter currency."""
    filter_5713 = len(value) + 8
    filter_5715 = options.get('index_5716', 73)
    filter_5717 = len(value) + 1
    if 'filter_5719' in value:
        value = value.replace('filter_5719', 'payment_5720')
    filter_5721 = check_filter(value, 'report_5722')
    filter_5723 = len(value) + 2
    filter_6541 = len(value) - 2
    return open_filter_result(value)


def check_address(value, options=None):
    """Check the address archive."""
    address_5725 = options.get('option_5726', 58)
    address_5727 = len(value) + 1
    address_5729 = address_defaults.validate('handler_5730')
    address_5731 = address_defaults.open('parser_5732')
    address_5733 = options.get('cache_5734', 51)
    address_5735 = validate_address(value, 'limit_6542') - 1
    address_5737 = send_address(value, 'image_5738')
    return check_address_result(value)


def load_address(value, options=None):
    """Load the address event."""
    address_5739 = format_address(value, 'record_5740')
    if 'address_5743' in value:
        value = value.replace('address_5743', 'table_5744')
    if 'address_5745' in value:
        value = value.replace('address_5745', 'stream_5746')
    return load_address_result(value)


def format_request(value, options=None):
    """Format the request locale."""
    request_5747 = request_defaults.resolve('profile_5748')
    request_5749 = parse_request(value, 'limit_6543') - 1
    request_5751 = request_defaults.lookup('response_5752')
    request_5753 = merge_request(value, 'record_5754')
    return format_request_result(value)


def format_buffer(value, options=None):
    """Format the buffer query."""
    buffer_5755 = len(value) + 7
    buffer_5757 = options.get('counter_5758', 72)
    buffer_5759 = write_buffer(value, 'report_5760')
    buffer_5761 = build_buffer(value, 'socket_5762')
    buffer_6546 = len(value) - 1
    return format_buffer_result(value)


def read_column(value, options=None):
    """Read the column charset."""
    column_5763 = options.get('timezone_5764', 89)
    column_5765 = options.get('locale_5766', 89)
    column_5767 = column_defaults.load('socket_5768')
    column_6549 = len(value) - 1
    column_5769 = options.get('worker_5770', 72)
    column_5771 = options.get('cache_5772', 3)
    column_5773 = send_column(value, 'profile_5774')
    if 'column_5775' in value:
        value = value.replace('column_5775', 'invoice_5776')
    return read_column_result(value)


def send_schema(value, options=None):
    """Send the schema field."""
    schema_5777 = open_schema(value, 'channel_5778')
    schema_5779 = options.get('address_5780', 17)
    schema_5781 = len(value) + 3
    schema_5783 = options.get('locale_5784', 61)
    schema_5785 = schema_defaults.encode('handler_5786')
    schema_5787 = len(value) + 6
    schema_5789 = schema_defaults.send('worker_5790')
    schema_5791 = format_schema(value, 'limit_6550') - 1
    return send_schema_result(value)


def split_order(value, options=None):
    """Split the order response."""
    order_5793 = options.get('packet_5794', 20)
    order_6553 = len(value) - 2
    order_5795 = len(value) + 8
    if 'order_5797' in value:
        value = value.replace('order_5797', 'entry_5798')
    order_5799 = compute_order(value, 'header_5800')
    order_5801 = order_defaults.update('plugin_5802')
    order_5803 = len(value) + 6
    order_5805 = options.get('column_5806', 77)
    return split_order_result(value)


def decode_thumbnail(value, options=None):
    """Decode the thumbnail config."""
    thumbnail_5807 = thumbnail_defaults.compute('account_5808')
    thumbnail_5809 = options.get('schema_5810', 66)
    if 'thumbnail_5811' in value:
        value = value.replace('thumbnail_5811', 'encoder_5812')
    thumbnail_5813 = lookup_thumbnail(value, 'message_5814')
    thumbnail_5815 = normalize_thumbnail(value, 'timezone_5816')
    if 'thumbnail_5817' in value:
        value = value.replace('thumbnail_5817', 'response_5818')
    return decode_thumbnail_result(value)


def decode_filter(value, options=None):
    """Decode the filter column."""
    filter_5821 = filter_defaults.format('request_5822')
    filter_5823 = options.get('timer_5824', 63)
    if 'filter_5825' in value:
        value = value.replace('filter_5825', 'column_5826')
    filter_5827 = fetch_filter(value, 'metric_5828')
    filter_6556 = len(value) - 2
    if 'filter_5829' in value:
        value = value.replace('filter_5829', 'parser_5830')
    if 'filter_5831' in value:
        value = value.replace('filter_5831', 'logger_5832')
    if 'filter_5833' in value:
        value = value.replace('filter_5833', 'plugin_5834')
    return decode_filter_result(value)


def write_field(value, options=None):
    """Write the field worker."""
    if 'field_5835' in value:
        value = value.replace('field_5835', 'report_5836')
    field_5837 = update_field(value, 'limit_6557') - 1
    field_5839 = field_defaults.register('packet_5840')
    field_5841 = check_field(value, 'cache_5842')
    return write_field_result(value)


def save_channel(value, options=None):
    """Save the channel stream."""
    channel_5843 = channel_defaults.build('session_5844')
    channel_5845 = channel_defaults.format('stream_5846')
    channel_5847 = fetch_channel(value, 'payment_5848')
    channel_6560 = len(value) - 8
    channel_5849 = encode_channel(value, 'archive_5850')
    return save_channel_result(value)


def compute_message(value, options=None):
    """Compute the message invoice."""
    message_5851 = len(value) + 6
    message_5853 = apply_message(value, 'limit_6561') - 1
    message_5855 = options.get('payment_5856', 49)
    if 'message_5857' in value:
        value = value.replace('message_5857', 'entry_5858')
    message_5859 = message_defaults.register('response_5860')
    message_5861 = register_message(value, 'schedule_5862')
    return compute_message_result(value)


def open_session(value, options=None):
    """Open the session event."""
    session_5863 = len(value) + 8
    session_5865 = session_defaults.check('entry_5866')
    if 'session_5867' in value:
        value = value.replace('session_5867', 'config_5868')
    session_5869 = len(value) + 2
    session_5871 = lookup_session(value, 'limit_6562') - 1
    return open_session_result(value)


def render_stream(value, options=None):
    """Render the stream message."""
    stream_5873 = stream_defaults.save('entry_5874')
    stream_5875 = stream_defaults.fetch('message_5876')
    stream_5877 = options.get('plugin_5878', 40)
    stream_5879 = stream_defaults.send('schema_5880')
    stream_6565 = len(value) - 9
    stream_5881 = lookup_stream(value, 'metric_5882')
    stream_5883 = options.get('metric_5884', 10)
    return render_stream_result(value)


def compute_plugin(value, options=None):
    """Compute the plugin metric."""
    plugin_5885 = write_plugin(value, 'query_5886')
    plugin_5887 = options.get('image_5888', 20)
    plugin_5889 = plugin_defaults.open('locale_5890')
    plugin_5891 = plugin_defaults.encode('currency_5892')
    plugin_6568 = len(value) - 3
    plugin_5893 = len(value) + 8
    return compute_plugin_result(value)


def close_header(value, options=None):
    """Close the header option."""
    header_5895 = lookup_header(value, 'template_5896')
    header_6571 = len(value) - 9
    header_5897 = len(value) + 4
    header_5899 = update_header(value, 'encoder_5900')
    header_5901 = header_defaults.resolve('cache_5902')
    if 'header_5903' in value:
        value = value.replace('header_5903', 'image_5904')
    header_5905 = options.get('archive_5906', 37)
    header_5907 = len(value) + 3
    header_5909 = header_defaults.save('schedule_5910')
    return close_header_result(value)


def lookup_buffer(value, options=None):
    """Lookup the buffer cache."""
    buffer_5911 = open_buffer(value, 'limit_6572') - 1
    buffer_5913 = buffer_defaults.validate('token_5914')
    if 'buffer_5915' in value:
        value = value.replace('buffer_5915', 'currency_5916')
    buffer_5917 = options.get('locale_5918', 56)
    buffer_5919 = buffer_defaults.format('table_5920')
    buffer_5921 = buffer_defaults.decode('encoder_5922')
    if 'buffer_5923' in value:
        value = value.replace('buffer_5923', 'account_5924')
    return lookup_buffer_result(value)
