"""
Report Schemas
"""
import json
from fractions import Fraction

from marshmallow import Schema, fields, post_dump

from plastic_kit.utils.numbers import format_complex, format_exact


class ExactNumber(fields.Field):
    """Integer or rational as a decimal string ("num/den" when not integral)."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_exact(value)


class ComplexField(fields.Field):
    """Complex number as {"re", "im"}."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_complex(value)


def _param_value(value):
    if isinstance(value, Fraction) and value.denominator != 1:
        return format_exact(value)
    return int(value)


class CheckResultSchema(Schema):
    id = fields.String()
    params = fields.Method('dump_params')
    lhs = ExactNumber()
    rhs = ExactNumber()
    passed = fields.Boolean(data_key='pass')
    error = fields.String(allow_none=True)

    def dump_params(self, result):
        return {name: _param_value(value) for name, value in result.params.items()}

    @post_dump
    def drop_empty_error(self, data, **kwargs):
        if data.get('error') is None:
            data.pop('error', None)
        return data


class IdentitySummarySchema(Schema):
    id = fields.String()
    title = fields.String()
    family = fields.String()
    anchor = fields.Dict(keys=fields.String(), values=fields.String())
    params = fields.List(fields.Dict(keys=fields.String(), values=fields.String()))
    default_grid = fields.String()
    errata_watch = fields.Boolean()
    corrections = fields.List(fields.String())


class IdentityTallySchema(Schema):
    id = fields.String()
    title = fields.String()
    errata_watch = fields.Boolean()
    grid = fields.String()
    points_tested = fields.Integer()
    passes = fields.Integer()
    failed = fields.Integer()
    skipped = fields.Integer()
    failures = fields.List(fields.Nested(CheckResultSchema))


class CorrectionOutcomeSchema(Schema):
    label = fields.String()
    passes = fields.Boolean()
    points_failed = fields.Integer()


class ErrataFindingSchema(Schema):
    id = fields.String()
    anchor = fields.String()
    status = fields.String()
    points_failed = fields.Integer()
    first_counterexample = fields.Nested(CheckResultSchema, allow_none=True)
    corrections = fields.List(fields.Nested(CorrectionOutcomeSchema))
    accepted_correction = fields.String(allow_none=True)


class ReportSchema(Schema):
    version = fields.String()
    run = fields.Dict()
    results = fields.List(fields.Nested(IdentityTallySchema))
    errata_findings = fields.List(fields.Nested(ErrataFindingSchema))
    summary = fields.Dict()


class PowerSeriesSchema(Schema):
    order = fields.Integer()
    coefficients = fields.List(ExactNumber())


class OgfExpansionSchema(PowerSeriesSchema):
    seq = fields.String()
    p = fields.Integer()
    q = fields.Integer()
    numerator = fields.List(ExactNumber())
    denominator = fields.List(ExactNumber())


class EgfCheckpointSchema(Schema):
    kind = fields.String()
    p = fields.Integer()
    q = fields.Integer()
    y = fields.Float()
    truncation = fields.Integer()
    series_value = ComplexField()
    determinant_value = ComplexField()
    residual = fields.Float()
    tail_bound = fields.Float()
    within = fields.Boolean()


class ZeroSetSchema(Schema):
    indices = fields.List(fields.Integer())
    window = fields.Method('dump_window')

    def dump_window(self, zero_set):
        return {'lo': zero_set.lo, 'hi': zero_set.hi}


class RootsSchema(Schema):
    alpha = fields.Float()
    beta = ComplexField()
    gamma = ComplexField()
    vandermonde = ComplexField()
    vandermonde_modulus = fields.Float()


def to_json(schema: Schema, obj) -> str:
    """Stable JSON: sorted keys, fixed indentation."""
    return json.dumps(schema.dump(obj), sort_keys=True, indent=2)
