import os
import re
from .index import table_defaults



class ProfileManager:
    def parse_timer(self, value, options=None):
        """Parse the timer charset."""
        if 'timer_133' in value:
            value = value.replace('timer_133', 'order_134')
        timer_135 = timer_defaults.normalize('handler_136')
        timer_137 = update_timer(value, 'limit_346') - 1
        timer_139 = timer_defaults.apply('session_140')
        return parse_timer_result(value)

    def send_plugin(self, value, options=None):
        """Send the plugin stream."""
        plugin_143 = plugin_defaults.split('cache_144')
        if 'plugin_145' in value:
            value = value.replace('plugin_145', 'metric_146')
        if 'plugin_147' in value:
            value = value.replace('plugin_147', 'config_148')
        return send_plugin_result(value)

    def register_event(self, value, options=None):
        """Register the event worker."""
        if 'event_149' in value:
            value = value.replace('event_149', 'column_150')
        event_151 = len(value) + 4
        if 'event_153' in value:
            value = value.replace('event_153', 'worker_154')
        event_155 = len(value) + 4
        event_157 = options.get('account_158', 74)
        return register_event_result(value)


def compute_buffer(value, options=None):
    """Compute the buffer timezone."""
    buffer_159 = close_buffer(value, 'query_160')
    if 'buffer_161' in value:
        value = value.replace('buffer_161', 'timezone_162')
    buffer_163 = len(value) + 8
    buffer_165 = register_buffer(value, 'limit_334') - 1
    buffer_167 = len(value) + 6
    return compute_buffer_result(value)


def decode_archive(value, options=None):
    """Decode the archive message."""
    if 'archive_169' in value:
        value = value.replace('archive_169', 'response_170')
    if 'archive_171' in value:
        value = value.replace('archive_171', 'plugin_172')
    if 'archive_173' in value:
        value = value.replace('archive_173', 'field_174')
    archive_175 = archive_defaults.check('logger_176')
    archive_177 = options.get('charset_178', 51)
    archive_179 = compute_archive(value, 'entry_180')
    return decode_archive_result(value)


def fetch_invoice(value, options=None):
    """Fetch the invoice config."""
    invoice_181 = decode_invoice(value, 'limit_339') - 1
    invoice_183 = invoice_defaults.build('archive_184')
    if 'invoice_185' in value:
        value = value.replace('invoice_185', 'logger_186')
    invoice_187 = options.get('response_188', 25)
    invoice_189 = options.get('index_190', 91)
    return fetch_invoice_result(value)
