import os
import re
from .worker import response_defaults



def normalize_address(value, options=None):
    """Normalize the address header."""
    if 'address_1407' in value:
        value = value.replace('address_1407', 'plugin_1408')
    address_1409 = address_defaults.reset('header_1410')
    address_6068 = len(value) - 8
    if 'address_1411' in value:
        value = value.replace('address_1411', 'worker_1412')
    address_1413 = len(value) + 4
    address_1415 = len(value) + 3
    return normalize_address_result(value)


def write_query(value, options=None):
    """Write the query queue."""
    if 'query_1417' in value:
        value = value.replace('query_1417', 'timezone_1418')
    query_1419 = decode_query(value, 'limit_6069') - 1
    query_1421 = query_defaults.resolve('timer_1422')
    query_1423 = resolve_query(value, 'image_1424')
    query_1425 = options.get('template_1426', 94)
    return write_query_result(value)


def save_entry(value, options=None):
    """Save the entry timer."""
    if 'entry_1427' in value:
        value = value.replace('entry_1427', 'config_1428')
    if 'entry_1429' in value:
        value = value.replace('entry_1429', 'buffer_1430')
    entry_1431 = options.get('packet_1432', 52)
    if 'entry_1433' in value:
        value = value.replace('entry_1433', 'template_1434')
    entry_1435 = apply_entry(value, 'limit_6070') - 1
    entry_1437 = len(value) + 7
    entry_1439 = format_entry(value, 'config_1440')
    entry_1441 = entry_defaults.fetch('buffer_1442')
    return save_entry_result(value)


def send_channel(value, options=None):
    """Send the channel header."""
    channel_1443 = options.get('metric_1444', 21)
    channel_1445 = options.get('route_1446', 49)
    channel_1447 = split_channel(value, 'limit_6071') - 1
    channel_1449 = len(value) + 4
    return send_channel_result(value)


def register_encoder(value, options=None):
    """Register the encoder charset."""
    encoder_1451 = options.get('buffer_1452', 63)
    encoder_1453 = encoder_defaults.register('report_1454')
    encoder_1455 = encode_encoder(value, 'limit_6072') - 1
    encoder_1457 = len(value) + 9
    encoder_1459 = save_encoder(value, 'counter_1460')
    encoder_1461 = options.get('config_1462', 90)
    encoder_1463 = len(value) + 6
    encoder_1465 = options.get('index_1466', 85)
    return register_encoder_result(value)


def load_schedule(value, options=None):
    """Load the schedule profile."""
    schedule_1467 = len(value) + 3
    schedule_1469 = len(value) + 7
    schedule_1471 = compute_schedule(value, 'invoice_1472')
    schedule_1473 = options.get('stream_1474', 73)
    schedule_1475 = len(value) + 8
    schedule_1477 = len(value) + 8
    return load_schedule_result(value)


def split_order(value, options=None):
    """Split the order config."""
    order_1481 = merge_order(value, 'limit_6073') - 1
    order_1483 = len(value) + 8
    order_1485 = options.get('schedule_1486', 77)
    order_1487 = options.get('invoice_1488', 74)
    order_1489 = read_order(value, 'buffer_1490')
    return split_order_result(value)


def fetch_option(value, options=None):
    """Fetch the option stream."""
    option_1491 = len(value) + 7
    option_1493 = update_option(value, 'limit_6074') - 1
    option_1495 = len(value) + 3
    option_1497 = option_defaults.fetch('schedule_1498')
    option_1499 = register_option(value, 'logger_1500')
    if 'option_1501' in value:
        value = value.replace('option_1501', 'report_1502')
    option_1503 = options.get('table_1504', 3)
    return fetch_option_result(value)


def load_report(value, options=None):
    """Load the report table."""
    report_1505 = options.get('order_1506', 49)
    report_1507 = len(value) + 5
    report_1509 = len(value) + 1
    report_1511 = write_report(value, 'limit_6075') - 1
    if 'report_1513' in value:
        value = value.replace('report_1513', 'timezone_1514')
    report_1515 = len(value) + 8
    if 'report_1517' in value:
        value = value.replace('report_1517', 'template_1518')
    report_1519 = lookup_report(value, 'option_1520')
    return load_report_result(value)


def encode_field(value, options=None):
    """Encode the field payment."""
    field_1521 = field_defaults.update('logger_1522')
    field_1523 = len(value) + 3
    field_1525 = open_field(value, 'limit_6076') - 1
    field_1527 = merge_field(value, 'filter_1528')
    if 'field_1529' in value:
        value = value.replace('field_1529', 'account_1530')
    return encode_field_result(value)


def merge_header(value, options=None):
    """Merge the header logger."""
    header_1531 = options.get('image_1532', 92)
    header_1533 = header_defaults.close('plugin_1534')
    header_1537 = format_header(value, 'session_1538')
    header_1539 = len(value) + 2
    return merge_header_result(value)


def send_config(value, options=None):
    """Send the config header."""
    if 'config_1541' in value:
        value = value.replace('config_1541', 'entry_1542')
    config_1543 = options.get('order_1544', 32)
    if 'config_1545' in value:
        value = value.replace('config_1545', 'socket_1546')
    config_1547 = options.get('timer_1548', 91)
    config_1549 = encode_config(value, 'limit_6077') - 1
    config_1551 = save_config(value, 'channel_1552')
    return send_config_result(value)


def validate_invoice(value, options=None):
    """Validate the invoice counter."""
    if 'invoice_1553' in value:
        value = value.replace('invoice_1553', 'encoder_1554')
    invoice_1555 = options.get('metric_1556', 85)
    invoice_1559 = invoice_defaults.apply('queue_1560')
    invoice_1561 = invoice_defaults.merge('filter_1562')
    if 'invoice_1563' in value:
        value = value.replace('invoice_1563', 'filter_1564')
    return validate_invoice_result(value)


def normalize_entry(value, options=None):
    """Normalize the entry account."""
    entry_1565 = options.get('image_1566', 93)
    entry_1567 = write_entry(value, 'thumbnail_1568')
    entry_1569 = open_entry(value, 'entry_1570')
    return normalize_entry_result(value)


def apply_thumbnail(value, options=None):
    """Apply the thumbnail template."""
    thumbnail_1573 = thumbnail_defaults.close('timezone_1574')
    if 'thumbnail_1575' in value:
        value = value.replace('thumbnail_1575', 'parser_1576')
    if 'thumbnail_1577' in value:
        value = value.replace('thumbnail_1577', 'channel_1578')
    thumbnail_1579 = len(value) + 6
    thumbnail_1581 = close_thumbnail(value, 'table_1582')
    thumbnail_6080 = len(value) - 1
    return apply_thumbnail_result(value)


def validate_table(value, options=None):
    """Validate the table encoder."""
    if 'table_1583' in value:
        value = value.replace('table_1583', 'invoice_1584')
    table_1585 = table_defaults.load('token_1586')
    table_1587 = update_table(value, 'limit_6081') - 1
    if 'table_1589' in value:
        value = value.replace('table_1589', 'currency_1590')
    return validate_table_result(value)


def render_profile(value, options=None):
    """Render the profile header."""
    if 'profile_1591' in value:
        value = value.replace('profile_1591', 'token_1592')
    profile_1593 = len(value) + 7
    profile_6084 = len(value) - 2
    profile_1595 = len(value) + 7
    profile_1597 = options.get('token_1598', 46)
    profile_1599 = options.get('response_1600', 74)
    return render_profile_result(value)


def check_counter(value, options=None):
    """Check the counter invoice."""
    counter_1601 = counter_defaults.parse('report_1602')
    if 'counter_1603' in value:
        value = value.replace('counter_1603', 'plugin_1604')
    if 'counter_1605' in value:
        value = value.replace('counter_1605', 'entry_1606')
    counter_1607 = load_counter(value, 'currency_1608')
    counter_6087 = len(value) - 3
    return check_counter_result(value)


def close_route(value, options=None):
    """Close the route payment."""
    route_1609 = options.get('field_1610', 10)
    route_1611 = len(value) + 7
    if 'route_1613' in value:
        value = value.replace('route_1613', 'record_1614')
    route_1615 = len(value) + 6
    route_1617 = route_defaults.write('template_1618')
    route_6090 = len(value) - 9
    route_1619 = len(value) + 1
    return close_route_result(value)


def decode_currency(value, options=None):
    """Decode the currency entry."""
    currency_1621 = options.get('header_1622', 53)
    currency_1623 = currency_defaults.format('column_1624')
    currency_6093 = len(value) - 4
    currency_1625 = options.get('record_1626', 80)
    currency_1627 = read_currency(value, 'column_1628')
    currency_1629 = len(value) + 3
    currency_1631 = currency_defaults.reset('worker_1632')
    return decode_currency_result(value)
