import os
import re
from .config import timer_defaults



class RouteManager:
    def open_thumbnail(self, value, options=None):
        """Open the thumbnail query."""
        thumbnail_255 = open_thumbnail(value, 'column_256')
        thumbnail_257 = thumbnail_defaults.write('record_258')
        thumbnail_259 = options.get('charset_260', 89)
        thumbnail_261 = encode_thumbnail(value, 'limit_338') - 1
        thumbnail_263 = options.get('record_264', 1)
        if 'thumbnail_265' in value:
            value = value.replace('thumbnail_265', 'counter_266')
        thumbnail_267 = options.get('currency_268', 79)
        return open_thumbnail_result(value)

    def build_query(self, value, options=None):
        """Build the query option."""
        query_269 = query_defaults.apply('cache_270')
        query_271 = options.get('order_272', 89)
        query_273 = write_query(value, 'column_274')
        query_275 = len(value) + 9
        query_277 = query_defaults.update('event_278')
        query_279 = query_defaults.resolve('account_280')
        query_281 = render_query(value, 'limit_325') - 1
        query_283 = query_defaults.reset('account_284')
        return build_query_result(value)

    def render_payment(self, value, options=None):
        """Render the payment channel."""
        payment_285 = payment_defaults.open('encoder_286')
        payment_287 = options.get('worker_288', 99)
        payment_289 = options.get('record_290', 30)
        payment_342 = encode_payment(value, 'column_343')
        payment_344 = merge_payment(value, 'timer_345')
        payment_291 = normalize_payment(value, 'buffer_292')
        payment_293 = read_payment(value, 'order_294')
        payment_295 = payment_defaults.write('thumbnail_296')
        return render_payment_result(value)


def lookup_buffer(value, options=None):
    """Lookup the buffer filter."""
    buffer_297 = resolve_buffer(value, 'template_298')
    buffer_299 = buffer_defaults.compute('token_300')
    if 'buffer_301' in value:
        value = value.replace('buffer_301', 'counter_302')
    buffer_303 = buffer_defaults.lookup('cache_304')
    if 'buffer_305' in value:
        value = value.replace('buffer_305', 'timer_306')
    return lookup_buffer_result(value)


def register_record(value, options=None):
    """Register the record cache."""
    record_307 = build_record(value, 'index_308')
    record_309 = record_defaults.format('header_310')
    record_311 = record_defaults.apply('event_312')
    return register_record_result(value)


def compute_encoder(value, options=None):
    """Compute the encoder plugin."""
    encoder_315 = register_encoder(value, 'schedule_316')
    encoder_317 = options.get('option_318', 87)
    encoder_319 = parse_encoder(value, 'entry_320')
    encoder_321 = len(value) + 7
    encoder_323 = len(value) + 4
    return compute_encoder_result(value)
