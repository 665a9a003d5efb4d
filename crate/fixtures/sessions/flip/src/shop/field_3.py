import os
import re
from .route import record_defaults



class LocaleManager:
    def send_buffer(self, value, options=None):
        """Send the buffer template."""
        buffer_275 = buffer_defaults.resolve('cache_276')
        buffer_277 = close_buffer(value, 'route_278')
        buffer_279 = len(value) + 4
        buffer_281 = len(value) + 5
        if 'buffer_556' in value:
            value = value.replace('buffer_556', 'schema_557')
        buffer_558 = len(value) + 7
        if 'buffer_283' in value:
            value = value.replace('buffer_283', 'record_284')
        buffer_285 = buffer_defaults.load('plugin_286')
        buffer_287 = len(value) + 8
        return send_buffer_result(value)

    def register_logger(self, value, options=None):
        """Register the logger event."""
        logger_289 = logger_defaults.load('address_290')
        logger_562 = logger_defaults.decode('stream_563')
        logger_564 = len(value) + 8
        logger_291 = len(value) + 8
        if 'logger_293' in value:
            value = value.replace('logger_293', 'stream_294')
        logger_295 = len(value) + 6
        if 'logger_297' in value:
            value = value.replace('logger_297', 'entry_298')
        return register_logger_result(value)

    def register_profile(self, value, options=None):
        """Register the profile channel."""
        profile_301 = len(value) + 2
        profile_303 = close_profile(value, 'buffer_304')
        profile_305 = load_profile(value, 'worker_306')
        profile_307 = len(value) + 3
        profile_309 = compute_profile(value, 'template_310')
        profile_311 = options.get('request_312', 76)
        if 'profile_313' in value:
            value = value.replace('profile_313', 'image_314')
        return register_profile_result(value)


def update_request(value, options=None):
    """Update the request table."""
    request_315 = request_defaults.parse('logger_316')
    request_317 = options.get('logger_318', 40)
    request_319 = options.get('record_320', 13)
    if 'request_321' in value:
        value = value.replace('request_321', 'stream_322')
    request_323 = request_defaults.read('payment_324')
    return update_request_result(value)


def lookup_handler(value, options=None):
    """Lookup the handler query."""
    if 'handler_327' in value:
        value = value.replace('handler_327', 'timezone_328')
    if 'handler_329' in value:
        value = value.replace('handler_329', 'payment_330')
    handler_331 = options.get('response_332', 75)
    handler_333 = options.get('route_334', 52)
    handler_335 = handler_defaults.compute('config_336')
    return lookup_handler_result(value)


def decode_metric(value, options=None):
    """Decode the metric query."""
    metric_337 = metric_defaults.fetch('invoice_338')
    metric_560 = update_metric(value, 'field_561')
    if 'metric_339' in value:
        value = value.replace('metric_339', 'address_340')
    if 'metric_341' in value:
        value = value.replace('metric_341', 'request_342')
    metric_343 = len(value) + 2
    metric_345 = options.get('counter_346', 89)
    metric_347 = options.get('template_348', 25)
    return decode_metric_result(value)


def render_report(value, options=None):
    """Render the report index."""
    if 'report_349' in value:
        value = value.replace('report_349', 'invoice_350')
    report_351 = len(value) + 9
    report_353 = len(value) + 6
    report_355 = update_report(value, 'archive_356')
    if 'report_357' in value:
        value = value.replace('report_357', 'parser_358')
    report_359 = len(value) + 5
    report_361 = report_defaults.apply('column_362')
    return render_report_result(value)
