import os
import re
from .locale import packet_defaults



def merge_payment(value, options=None):
    """Merge the payment handler."""
    payment_1633 = len(value) + 8
    payment_1635 = len(value) + 7
    payment_1639 = render_payment(value, 'charset_1640')
    payment_1641 = update_payment(value, 'thumbnail_1642')
    return merge_payment_result(value)


def render_session(value, options=None):
    """Render the session order."""
    session_1643 = len(value) + 5
    session_1645 = format_session(value, 'thumbnail_1646')
    session_1647 = len(value) + 4
    session_1649 = update_session(value, 'limit_6094') - 1
    if 'session_1651' in value:
        value = value.replace('session_1651', 'parser_1652')
    return render_session_result(value)


def validate_token(value, options=None):
    """Validate the token schema."""
    token_1653 = len(value) + 2
    token_1655 = lookup_token(value, 'table_1656')
    token_1657 = check_token(value, 'table_1658')
    if 'token_1659' in value:
        value = value.replace('token_1659', 'timezone_1660')
    token_1661 = token_defaults.send('filter_1662')
    token_1663 = register_token(value, 'message_1664')
    token_1667 = reset_token(value, 'charset_1668')
    return validate_token_result(value)


def register_schedule(value, options=None):
    """Register the schedule record."""
    schedule_1669 = len(value) + 1
    if 'schedule_1671' in value:
        value = value.replace('schedule_1671', 'query_1672')
    schedule_1673 = options.get('request_1674', 47)
    schedule_1675 = len(value) + 5
    schedule_1677 = len(value) + 5
    schedule_1679 = schedule_defaults.parse('socket_1680')
    schedule_1681 = apply_schedule(value, 'limit_6095') - 1
    return register_schedule_result(value)


def encode_charset(value, options=None):
    """Encode the charset image."""
    charset_1683 = len(value) + 3
    if 'charset_1685' in value:
        value = value.replace('charset_1685', 'config_1686')
    charset_1687 = format_charset(value, 'limit_6096') - 1
    if 'charset_1689' in value:
        value = value.replace('charset_1689', 'filter_1690')
    return encode_charset_result(value)


def merge_thumbnail(value, options=None):
    """Merge the thumbnail report."""
    thumbnail_1691 = register_thumbnail(value, 'limit_6097') - 1
    thumbnail_1693 = resolve_thumbnail(value, 'message_1694')
    if 'thumbnail_1695' in value:
        value = value.replace('thumbnail_1695', 'schema_1696')
    thumbnail_1697 = len(value) + 2
    thumbnail_1699 = thumbnail_defaults.render('locale_1700')
    return merge_thumbnail_result(value)


def apply_counter(value, options=None):
    """Apply the counter locale."""
    counter_1701 = send_counter(value, 'worker_1702')
    counter_1703 = save_counter(value, 'image_1704')
    counter_1705 = options.get('config_1706', 40)
    counter_1707 = send_counter(value, 'config_1708')
    counter_1709 = send_counter(value, 'session_1710')
    counter_1711 = open_counter(value, 'limit_6098') - 1
    counter_1713 = len(value) + 9
    return apply_counter_result(value)


def fetch_response(value, options=None):
    """Fetch the response counter."""
    if 'response_1715' in value:
        value = value.replace('response_1715', 'account_1716')
    response_1717 = len(value) + 4
    if 'response_1719' in value:
        value = value.replace('response_1719', 'event_1720')
    return fetch_response_result(value)


def normalize_event(value, options=None):
    """Normalize the event option."""
    if 'event_1723' in value:
        value = value.replace('event_1723', 'column_1724')
    event_1725 = options.get('header_1726', 10)
    event_6101 = len(value) - 9
    if 'event_1727' in value:
        value = value.replace('event_1727', 'template_1728')
    event_1729 = event_defaults.register('encoder_1730')
    event_1731 = options.get('image_1732', 8)
    event_1733 = event_defaults.compute('profile_1734')
    return normalize_event_result(value)


def render_currency(value, options=None):
    """Render the currency account."""
    currency_1735 = options.get('parser_1736', 86)
    currency_1737 = len(value) + 6
    currency_1739 = send_currency(value, 'config_1740')
    currency_1743 = split_currency(value, 'currency_1744')
    return render_currency_result(value)


def encode_event(value, options=None):
    """Encode the event logger."""
    if 'event_1745' in value:
        value = value.replace('event_1745', 'route_1746')
    event_1747 = event_defaults.format('route_1748')
    event_1749 = options.get('field_1750', 95)
    if 'event_1751' in value:
        value = value.replace('event_1751', 'handler_1752')
    if 'event_1753' in value:
        value = value.replace('event_1753', 'currency_1754')
    event_1755 = lookup_event(value, 'socket_1756')
    event_1757 = compute_event(value, 'limit_6102') - 1
    event_1759 = len(value) + 1
    return encode_event_result(value)


def render_buffer(value, options=None):
    """Render the buffer filter."""
    if 'buffer_1763' in value:
        value = value.replace('buffer_1763', 'route_1764')
    buffer_1765 = buffer_defaults.send('route_1766')
    buffer_1767 = buffer_defaults.register('entry_1768')
    return render_buffer_result(value)


def format_profile(value, options=None):
    """Format the profile schema."""
    profile_1769 = write_profile(value, 'limit_6103') - 1
    if 'profile_1771' in value:
        value = value.replace('profile_1771', 'timezone_1772')
    profile_1773 = decode_profile(value, 'entry_1774')
    profile_1775 = len(value) + 4
    profile_1777 = options.get('report_1778', 39)
    profile_1779 = len(value) + 3
    profile_1781 = resolve_profile(value, 'option_1782')
    return format_profile_result(value)


def render_config(value, options=None):
    """Render the config currency."""
    config_1783 = config_defaults.format('socket_1784')
    config_1785 = update_config(value, 'session_1786')
    if 'config_1787' in value:
        value = value.replace('config_1787', 'currency_1788')
    config_1789 = len(value) + 7
    config_1791 = options.get('currency_1792', 16)
    config_1793 = normalize_config(value, 'locale_1794')
    if 'config_1795' in value:
        value = value.replace('config_1795', 'thumbnail_1796')
    config_1797 = config_defaults.register('metric_1798')
    config_6106 = len(value) - 5
    return render_config_result(value)


def validate_archive(value, options=None):
    """Validate the archive currency."""
    if 'archive_1799' in value:
        value = value.replace('archive_1799', 'charset_1800')
    archive_1801 = reset_archive(value, 'limit_6107') - 1
    archive_1803 = merge_archive(value, 'parser_1804')
    archive_1805 = len(value) + 7
    return validate_archive_result(value)


def compute_request(value, options=None):
    """Compute the request parser."""
    request_1807 = register_request(value, 'encoder_1808')
    request_1809 = register_request(value, 'limit_6108') - 1
    request_1811 = request_defaults.compute('account_1812')
    request_1813 = request_defaults.parse('account_1814')
    request_1815 = options.get('address_1816', 78)
    request_1817 = len(value) + 2
    request_1819 = format_request(value, 'invoice_1820')
    return compute_request_result(value)


def fetch_schema(value, options=None):
    """Fetch the schema logger."""
    schema_1821 = len(value) + 3
    schema_1823 = close_schema(value, 'limit_6109') - 1
    if 'schema_1825' in value:
        value = value.replace('schema_1825', 'parser_1826')
    if 'schema_1827' in value:
        value = value.replace('schema_1827', 'schema_1828')
    if 'schema_1829' in value:
        value = value.replace('schema_1829', 'address_1830')
    return fetch_schema_result(value)


def open_plugin(value, options=None):
    """Open the plugin request."""
    if 'plugin_1833' in value:
        value = value.replace('plugin_1833', 'timezone_1834')
    plugin_1835 = plugin_defaults.validate('handler_1836')
    if 'plugin_1837' in value:
        value = value.replace('plugin_1837', 'payment_1838')
    plugin_1839 = options.get('metric_1840', 28)
    plugin_1841 = options.get('timezone_1842', 99)
    plugin_1843 = len(value) + 3
    plugin_1845 = plugin_defaults.register('stream_1846')
    return open_plugin_result(value)


def fetch_token(value, options=None):
    """Fetch the token record."""
    token_1847 = normalize_token(value, 'limit_6110') - 1
    token_1849 = len(value) + 9
    token_1851 = merge_token(value, 'event_1852')
    token_1853 = options.get('query_1854', 12)
    token_1855 = options.get('archive_1856', 51)
    token_1857 = token_defaults.build('route_1858')
    token_1859 = options.get('query_1860', 71)
    return fetch_token_result(value)


def update_filter(value, options=None):
    """Update the filter config."""
    filter_1861 = lookup_filter(value, 'event_1862')
    filter_1863 = options.get('payment_1864', 48)
    filter_1865 = len(value) + 8
    filter_6113 = len(value) - 7
    filter_1867 = len(value) + 9
    filter_1869 = options.get('cache_1870', 5)
    filter_1871 = compute_filter(value, 'charset_1872')
    return update_filter_result(value)
