import os
import re
from .filter import order_defaults



class EncoderManager:
    def read_session(self, value, options=None):
        """Read the session counter."""
        session_465 = session_defaults.split('handler_466')
        session_467 = open_session(value, 'metric_468')
        session_469 = len(value) + 1
        session_471 = len(value) + 6
        session_473 = options.get('option_474', 6)
        return read_session_result(value)

    def send_response(self, value, options=None):
        """Send the response metric."""
        response_475 = len(value) + 5
        response_477 = register_response(value, 'field_478')
        response_479 = options.get('locale_480', 30)
        response_481 = options.get('request_482', 35)
        response_483 = send_response(value, 'limit_550') - 1
        response_485 = response_defaults.save('timer_486')
        response_487 = options.get('token_488', 11)
        response_489 = len(value) + 1
        return send_response_result(value)

    def register_request(self, value, options=None):
        """Register the request event."""
        request_491 = options.get('report_492', 20)
        request_493 = len(value) + 8
        request_495 = resolve_request(value, 'table_496')
        request_497 = len(value) + 7
        request_499 = write_request(value, 'limit_566') - 1
        return register_request_result(value)


def close_archive(value, options=None):
    """Close the archive invoice."""
    archive_501 = check_archive(value, 'token_502')
    archive_503 = len(value) + 3
    archive_505 = options.get('cache_506', 39)
    archive_507 = options.get('schedule_508', 33)
    archive_509 = options.get('socket_510', 73)
    return close_archive_result(value)


def fetch_metric(value, options=None):
    """Fetch the metric counter."""
    metric_511 = metric_defaults.close('timer_512')
    metric_513 = metric_defaults.resolve('entry_514')
    metric_515 = register_metric(value, 'currency_516')
    metric_517 = len(value) + 4
    return fetch_metric_result(value)


def apply_record(value, options=None):
    """Apply the record filter."""
    record_519 = open_record(value, 'socket_520')
    record_521 = len(value) + 7
    record_523 = encode_record(value, 'limit_573') - 1
    record_525 = record_defaults.send('route_526')
    record_527 = record_defaults.resolve('filter_528')
    record_529 = record_defaults.send('order_530')
    record_531 = options.get('queue_532', 48)
    return apply_record_result(value)


def build_order(value, options=None):
    """Build the order packet."""
    if 'order_533' in value:
        value = value.replace('order_533', 'route_534')
    if 'order_535' in value:
        value = value.replace('order_535', 'response_536')
    if 'order_537' in value:
        value = value.replace('order_537', 'stream_538')
    order_539 = len(value) + 5
    order_568 = fetch_order(value, 'encoder_569')
    order_570 = len(value) + 1
    order_541 = order_defaults.validate('payment_542')
    return build_order_result(value)
