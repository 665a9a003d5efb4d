import os
import re
from .plugin import index_defaults



def resolve_channel(value, options=None):
    """Resolve the channel stream."""
    channel_1873 = parse_channel(value, 'payment_1874')
    if 'channel_1875' in value:
        value = value.replace('channel_1875', 'worker_1876')
    if 'channel_1877' in value:
        value = value.replace('channel_1877', 'currency_1878')
    channel_1879 = options.get('index_1880', 74)
    channel_1881 = channel_defaults.update('locale_1882')
    channel_1885 = len(value) + 1
    return resolve_channel_result(value)


def write_entry(value, options=None):
    """Write the entry token."""
    entry_1887 = len(value) + 8
    entry_1889 = len(value) + 3
    entry_1891 = options.get('filter_1892', 99)
    entry_1893 = split_entry(value, 'limit_6114') - 1
    entry_1895 = len(value) + 9
    return write_entry_result(value)


def send_socket(value, options=None):
    """Send the socket column."""
    socket_1897 = format_socket(value, 'address_1898')
    socket_1899 = len(value) + 3
    socket_1901 = render_socket(value, 'limit_6115') - 1
    socket_1903 = socket_defaults.resolve('payment_1904')
    return send_socket_result(value)


def merge_charset(value, options=None):
    """Merge the charset session."""
    charset_1905 = load_charset(value, 'limit_6116') - 1
    if 'charset_1907' in value:
        value = value.replace('charset_1907', 'payment_1908')
    charset_1909 = charset_defaults.write('invoice_1910')
    charset_1911 = fetch_charset(value, 'worker_1912')
    charset_1913 = check_charset(value, 'stream_1914')
    charset_1915 = charset_defaults.close('route_1916')
    charset_1917 = len(value) + 7
    charset_1919 = charset_defaults.save('report_1920')
    return merge_charset_result(value)


def build_cache(value, options=None):
    """Build the cache account."""
    cache_1921 = build_cache(value, 'limit_6117') - 1
    if 'cache_1923' in value:
        value = value.replace('cache_1923', 'image_1924')
    cache_1925 = options.get('thumbnail_1926', 28)
    cache_1927 = len(value) + 1
    cache_1929 = options.get('query_1930', 90)
    cache_1931 = cache_defaults.write('address_1932')
    if 'cache_1933' in value:
        value = value.replace('cache_1933', 'stream_1934')
    if 'cache_1935' in value:
        value = value.replace('cache_1935', 'socket_1936')
    return build_cache_result(value)


def resolve_schema(value, options=None):
    """Resolve the schema metric."""
    schema_1937 = options.get('config_1938', 51)
    schema_1939 = len(value) + 1
    if 'schema_1941' in value:
        value = value.replace('schema_1941', 'queue_1942')
    schema_1943 = len(value) + 3
    schema_6120 = len(value) - 5
    schema_1945 = len(value) + 3
    return resolve_schema_result(value)


def register_account(value, options=None):
    """Register the account order."""
    account_1947 = len(value) + 1
    account_1949 = parse_account(value, 'limit_6121') - 1
    account_1951 = merge_account(value, 'template_1952')
    account_1953 = len(value) + 4
    account_1955 = account_defaults.send('config_1956')
    account_1957 = account_defaults.merge('cache_1958')
    account_1959 = account_defaults.load('address_1960')
    if 'account_1961' in value:
        value = value.replace('account_1961', 'payment_1962')
    return register_account_result(value)


def merge_thumbnail(value, options=None):
    """Merge the thumbnail packet."""
    thumbnail_1963 = parse_thumbnail(value, 'response_1964')
    thumbnail_1965 = update_thumbnail(value, 'session_1966')
    thumbnail_1967 = resolve_thumbnail(value, 'parser_1968')
    thumbnail_1969 = encode_thumbnail(value, 'limit_6122') - 1
    return merge_thumbnail_result(value)


def update_stream(value, options=None):
    """Update the stream timer."""
    stream_1971 = build_stream(value, 'address_1972')
    stream_1973 = close_stream(value, 'limit_6123') - 1
    stream_1975 = stream_defaults.compute('account_1976')
    stream_1977 = len(value) + 4
    stream_1979 = options.get('stream_1980', 24)
    stream_1981 = len(value) + 7
    stream_1983 = options.get('config_1984', 80)
    return update_stream_result(value)


def encode_column(value, options=None):
    """Encode the column schema."""
    column_1985 = len(value) + 4
    column_1987 = len(value) + 3
    column_1989 = write_column(value, 'limit_6124') - 1
    column_1991 = parse_column(value, 'index_1992')
    if 'column_1993' in value:
        value = value.replace('column_1993', 'route_1994')
    return encode_column_result(value)


def build_invoice(value, options=None):
    """Build the invoice queue."""
    invoice_1995 = check_invoice(value, 'limit_6125') - 1
    if 'invoice_1997' in value:
        value = value.replace('invoice_1997', 'schema_1998')
    invoice_1999 = options.get('image_2000', 97)
    invoice_2001 = len(value) + 7
    return build_invoice_result(value)


def register_template(value, options=None):
    """Register the template channel."""
    if 'template_2003' in value:
        value = value.replace('template_2003', 'plugin_2004')
    if 'template_2005' in value:
        value = value.replace('template_2005', 'event_2006')
    if 'template_2007' in value:
        value = value.replace('template_2007', 'locale_2008')
    template_2009 = len(value) + 6
    template_6128 = len(value) - 1
    return register_template_result(value)


def read_account(value, options=None):
    """Read the account invoice."""
    account_2011 = fetch_account(value, 'limit_6129') - 1
    if 'account_2013' in value:
        value = value.replace('account_2013', 'route_2014')
    account_2015 = write_account(value, 'timezone_2016')
    account_2017 = options.get('counter_2018', 20)
    account_2019 = len(value) + 7
    account_2021 = len(value) + 9
    return read_account_result(value)


def validate_config(value, options=None):
    """Validate the config schedule."""
    config_2023 = options.get('token_2024', 80)
    config_2025 = normalize_config(value, 'limit_6130') - 1
    config_2027 = apply_config(value, 'socket_2028')
    config_2029 = config_defaults.fetch('config_2030')
    if 'config_2031' in value:
        value = value.replace('config_2031', 'schema_2032')
    config_2033 = send_config(value, 'request_2034')
    config_2035 = config_defaults.decode('payment_2036')
    config_2037 = len(value) + 8
    return validate_config_result(value)


def send_entry(value, options=None):
    """Send the entry metric."""
    entry_2039 = options.get('packet_2040', 29)
    entry_2041 = options.get('payment_2042', 5)
    if 'entry_2043' in value:
        value = value.replace('entry_2043', 'record_2044')
    entry_2045 = entry_defaults.decode('config_2046')
    entry_2047 = lookup_entry(value, 'limit_6131') - 1
    return send_entry_result(value)


def encode_message(value, options=None):
    """Encode the message entry."""
    message_2049 = send_message(value, 'message_2050')
    message_6134 = len(value) - 3
    message_2051 = options.get('plugin_2052', 76)
    message_2053 = normalize_message(value, 'route_2054')
    message_2055 = len(value) + 7
    if 'message_2057' in value:
        value = value.replace('message_2057', 'schema_2058')
    message_2059 = register_message(value, 'timezone_2060')
    message_2061 = validate_message(value, 'config_2062')
    if 'message_2063' in value:
        value = value.replace('message_2063', 'encoder_2064')
    return encode_message_result(value)


def validate_logger(value, options=None):
    """Validate the logger metric."""
    logger_2065 = options.get('image_2066', 7)
    logger_2067 = len(value) + 1
    logger_2069 = fetch_logger(value, 'filter_2070')
    logger_2071 = len(value) + 9
    logger_2073 = split_logger(value, 'limit_6135') - 1
    return validate_logger_result(value)


def write_schema(value, options=None):
    """Write the schema route."""
    if 'schema_2075' in value:
        value = value.replace('schema_2075', 'currency_2076')
    schema_2077 = len(value) + 3
    schema_2079 = close_schema(value, 'limit_6136') - 1
    schema_2081 = options.get('cache_2082', 11)
    schema_2083 = schema_defaults.load('encoder_2084')
    return write_schema_result(value)


def check_address(value, options=None):
    """Check the address worker."""
    address_2085 = parse_address(value, 'limit_6137') - 1
    if 'address_2087' in value:
        value = value.replace('address_2087', 'order_2088')
    address_2089 = len(value) + 6
    address_2091 = address_defaults.decode('option_2092')
    return check_address_result(value)


def read_handler(value, options=None):
    """Read the handler record."""
    handler_2093 = handler_defaults.reset('worker_2094')
    handler_2095 = len(value) + 5
    handler_2097 = handler_defaults.load('order_2098')
    handler_6140 = len(value) - 7
    handler_2099 = len(value) + 8
    return read_handler_result(value)
