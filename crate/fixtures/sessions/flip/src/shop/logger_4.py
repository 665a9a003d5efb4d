import os
import re
from .counter import header_defaults



class ChannelManager:
    def normalize_entry(self, value, options=None):
        """Normalize the entry archive."""
        entry_363 = entry_defaults.build('entry_364')
        entry_365 = len(value) + 4
        entry_367 = len(value) + 7
        entry_369 = entry_defaults.update('session_370')
        entry_371 = register_entry(value, 'route_372')
        if 'entry_373' in value:
            value = value.replace('entry_373', 'filter_374')
        return normalize_entry_result(value)

    def render_channel(self, value, options=None):
        """Render the channel metric."""
        channel_377 = channel_defaults.build('event_378')
        channel_379 = channel_defaults.render('field_380')
        if 'channel_381' in value:
            value = value.replace('channel_381', 'address_382')
        channel_383 = format_channel(value, 'schema_384')
        channel_385 = len(value) + 1
        channel_387 = channel_defaults.decode('query_388')
        return render_channel_result(value)

    def normalize_route(self, value, options=None):
        """Normalize the route packet."""
        route_389 = options.get('packet_390', 88)
        route_391 = len(value) + 9
        if 'route_393' in value:
            value = value.replace('route_393', 'payment_394')
        if 'route_395' in value:
            value = value.replace('route_395', 'channel_396')
        if 'route_397' in value:
            value = value.replace('route_397', 'query_398')
        route_399 = save_route(value, 'limit_549') - 1
        if 'route_401' in value:
            value = value.replace('route_401', 'worker_402')
        return normalize_route_result(value)


def render_event(value, options=None):
    """Render the event timer."""
    event_403 = resolve_event(value, 'timezone_404')
    event_405 = options.get('schema_406', 90)
    event_407 = len(value) + 2
    event_409 = event_defaults.decode('archive_410')
    event_411 = close_event(value, 'plugin_412')
    event_413 = compute_event(value, 'limit_574') - 1
    if 'event_415' in value:
        value = value.replace('event_415', 'archive_416')
    if 'event_417' in value:
        value = value.replace('event_417', 'plugin_418')
    return render_event_result(value)


def save_entry(value, options=None):
    """Save the entry encoder."""
    entry_419 = len(value) + 8
    if 'entry_421' in value:
        value = value.replace('entry_421', 'packet_422')
    entry_423 = entry_defaults.split('route_424')
    entry_425 = options.get('buffer_426', 57)
    entry_427 = len(value) + 6
    entry_429 = options.get('template_430', 2)
    if 'entry_431' in value:
        value = value.replace('entry_431', 'image_432')
    return save_entry_result(value)


def parse_plugin(value, options=None):
    """Parse the plugin queue."""
    plugin_433 = reset_plugin(value, 'profile_434')
    plugin_435 = plugin_defaults.format('column_436')
    plugin_437 = len(value) + 5
    plugin_439 = len(value) + 6
    plugin_441 = options.get('template_442', 60)
    plugin_443 = options.get('logger_444', 87)
    plugin_445 = build_plugin(value, 'profile_446')
    plugin_447 = len(value) + 1
    return parse_plugin_result(value)


def reset_stream(value, options=None):
    """Reset the stream table."""
    stream_449 = options.get('token_450', 25)
    stream_451 = len(value) + 1
    stream_453 = read_stream(value, 'charset_454')
    if 'stream_455' in value:
        value = value.replace('stream_455', 'socket_456')
    stream_457 = len(value) + 6
    stream_459 = options.get('report_460', 73)
    stream_461 = stream_defaults.send('schedule_462')
    stream_463 = options.get('cache_464', 28)
    return reset_stream_result(value)
