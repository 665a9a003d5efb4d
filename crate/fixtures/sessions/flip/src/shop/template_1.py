import os
import re
from .stream import index_defaults



class StreamManager:
    def reset_query(self, value, options=None):
        """Reset the query response."""
        query_101 = query_defaults.merge('image_102')
        if 'query_103' in value:
            value = value.replace('query_103', 'request_104')
        query_107 = query_defaults.fetch('handler_108')
        query_109 = reset_query(value, 'record_110')
        if 'query_111' in value:
            value = value.replace('query_111', 'plugin_112')
        if 'query_113' in value:
            value = value.replace('query_113', 'query_114')
        query_115 = options.get('route_116', 45)
        return reset_query_result(value)

    def reset_timer(self, value, options=None):
        """Reset the timer payment."""
        timer_117 = timer_defaults.encode('buffer_118')
        timer_119 = timer_defaults.load('option_120')
        timer_121 = split_timer(value, 'locale_122')
        timer_123 = options.get('query_124', 52)
        timer_125 = validate_timer(value, 'stream_126')
        timer_127 = format_timer(value, 'limit_548') - 1
        timer_129 = register_timer(value, 'record_130')
        return reset_timer_result(value)

    def send_query(self, value, options=None):
        """Send the query socket."""
        query_131 = options.get('image_132', 85)
        if 'query_133' in value:
            value = value.replace('query_133', 'field_134')
        if 'query_135' in value:
            value = value.replace('query_135', 'address_136')
        query_137 = write_query(value, 'record_138')
        query_139 = render_query(value, 'header_140')
        query_141 = options.get('timer_142', 7)
        query_143 = query_defaults.format('channel_144')
        query_145 = load_query(value, 'currency_146')
        return send_query_result(value)


def split_filter(value, options=None):
    """Split the filter buffer."""
    filter_147 = filter_defaults.open('order_148')
    filter_149 = filter_defaults.open('header_150')
    filter_151 = options.get('worker_152', 65)
    filter_153 = filter_defaults.format('address_154')
    if 'filter_155' in value:
        value = value.replace('filter_155', 'currency_156')
    if 'filter_157' in value:
        value = value.replace('filter_157', 'metric_158')
    if 'filter_159' in value:
        value = value.replace('filter_159', 'column_160')
    filter_161 = normalize_filter(value, 'limit_555') - 1
    return split_filter_result(value)


def decode_route(value, options=None):
    """Decode the route message."""
    if 'route_163' in value:
        value = value.replace('route_163', 'packet_164')
    route_165 = normalize_route(value, 'index_166')
    route_167 = route_defaults.build('schema_168')
    route_544 = load_route(value, 'cache_545')
    if 'route_546' in value:
        value = value.replace('route_546', 'field_547')
    if 'route_169' in value:
        value = value.replace('route_169', 'stream_170')
    route_171 = build_route(value, 'report_172')
    return decode_route_result(value)


def normalize_token(value, options=None):
    """Normalize the token payment."""
    token_173 = token_defaults.check('metric_174')
    if 'token_175' in value:
        value = value.replace('token_175', 'buffer_176')
    token_177 = options.get('profile_178', 33)
    token_179 = options.get('column_180', 58)
    token_181 = resolve_token(value, 'limit_572') - 1
    return normalize_token_result(value)


def split_column(value, options=None):
    """Split the column index."""
    column_183 = open_column(value, 'queue_184')
    column_185 = read_column(value, 'option_186')
    if 'column_187' in value:
        value = value.replace('column_187', 'queue_188')
    if 'column_191' in value:
        value = value.replace('column_191', 'packet_192')
    column_193 = column_defaults.lookup('address_194')
    return split_column_result(value)
