"""JSON schemas for the CLI's default output, one per subcommand.

Used by the test suite to hold the CLI to its published shapes; the same
definitions are rendered in docs/cli-schema.md.
"""

from __future__ import annotations

PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 1}}

CLASS_TERMS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["partitions", "coeff"],
        "properties": {
            "partitions": {"type": "array", "items": PARTITION},
            "coeff": {"type": "integer"},
        },
    },
}

VALUE = {"oneOf": [{"type": "integer"}, CLASS_TERMS]}

OPT_INT = {"type": ["integer", "null"]}

BETTI_TABLE = {
    "type": "object",
    "required": ["rows", "tail"],
    "properties": {
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "twist", "rank"],
                "properties": {
                    "index": {"type": "integer"},
                    "twist": {"type": "integer"},
                    "rank": {"type": "integer", "minimum": 1},
                    "label": {"type": "string"},
                },
            },
        },
        "tail": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["start", "rank", "step"],
                    "properties": {
                        "start": {"type": "integer"},
                        "rank": {"type": "integer"},
                        "step": {"type": "integer"},
                        "ratio": {"type": "integer"},
                    },
                },
            ]
        },
    },
}

PURITY = {
    "type": "object",
    "required": ["is_polynomial", "nonnegative", "coefficients", "dimension", "bound", "horizon"],
    "properties": {
        "is_polynomial": {"type": "boolean"},
        "nonnegative": {"type": "boolean"},
        "coefficients": {"type": "array", "items": {"type": "integer"}},
        "dimension": OPT_INT,
        "bound": {"type": "integer"},
        "horizon": {"type": "integer"},
    },
}


def _obj(required: dict, optional: dict | None = None) -> dict:
    props = dict(required)
    props.update(optional or {})
    return {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "type": "object",
        "required": sorted(required),
        "properties": props,
    }


SCHEMAS = {
    "pf-check": _obj(
        {
            "seq": {"type": "string"},
            "verdict": {"enum": ["positive-up-to-bounds", "negative"]},
            "order": {"type": "integer"},
            "window": {"type": "integer"},
            "checked": {"type": "integer"},
            "witness": {
                "oneOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": ["lambda", "mu", "value"],
                        "properties": {"lambda": PARTITION, "mu": PARTITION, "value": VALUE},
                    },
                ]
            },
        }
    ),
    "jt-minor": _obj(
        {"seq": {"type": "string"}, "lambda": PARTITION, "mu": PARTITION, "pad": OPT_INT, "value": VALUE}
    ),
    "lr": _obj(
        {"lambda": PARTITION, "mu": PARTITION, "nu": PARTITION, "coefficient": {"type": "integer", "minimum": 0}}
    ),
    "skew-expand": _obj({"lambda": PARTITION, "mu": PARTITION, "terms": CLASS_TERMS}),
    "dim": _obj(
        {"kind": {"enum": ["gl", "super", "quadric"]}, "lambda": PARTITION, "mu": PARTITION, "value": {"type": "integer"}},
        {"m": {"type": "integer"}, "r": {"type": "integer"}, "s": {"type": "integer"}, "method": {"type": "string"}},
    ),
    "veronese": _obj(
        {
            "seq": {"type": "string"},
            "d": {"type": "integer"},
            "lambda": PARTITION,
            "mu": PARTITION,
            "pad": OPT_INT,
            "value": VALUE,
            "identity_ok": {"type": "boolean"},
        }
    ),
    "tensor": _obj(
        {
            "a": {"type": "string"},
            "b": {"type": "string"},
            "lambda": PARTITION,
            "mu": PARTITION,
            "pad": OPT_INT,
            "value": VALUE,
            "identity_ok": {"type": "boolean"},
        }
    ),
    "segre": _obj(
        {
            "a": {"type": "string"},
            "b": {"type": "string"},
            "lambda": PARTITION,
            "mu": PARTITION,
            "pad": OPT_INT,
            "value": VALUE,
        }
    ),
    "e-class": _obj({"seq": {"type": "string"}, "d": {"type": "integer"}, "value": VALUE}),
    "schur-profile": _obj(
        {
            "seq": {"type": "string"},
            "r_max": {"type": "integer"},
            "s_max": {"type": "integer"},
            "profile": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
                ]
            },
        }
    ),
    "ortho-decomp": _obj(
        {
            "m": {"type": "integer"},
            "lambda": PARTITION,
            "entries": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["mu", "mult"],
                    "properties": {"mu": PARTITION, "mult": {"type": "integer", "minimum": 1}},
                },
            },
            "dimension": {"type": "integer"},
            "schur_dim": {"type": "integer"},
        }
    ),
    "hs-check": _obj(
        {
            "m": {"type": "integer"},
            "n": {"type": "integer"},
            "trunc": {"type": "integer"},
            "factorization": {"type": "boolean"},
            "coefficients": {"type": "boolean"},
            "ok": {"type": "boolean"},
        }
    ),
    "efw": _obj(
        {
            "shifts": {"type": "array", "items": {"type": "integer"}},
            "e_dim": {"type": "integer"},
            "partitions": {"type": "array", "items": PARTITION},
            "table": BETTI_TABLE,
        }
    ),
    "resolve": _obj(
        {"ring": {"enum": ["quadric", "rnc", "poly"]}, "shifts": {"type": "array", "items": {"type": "integer"}}, "table": BETTI_TABLE},
        {"m": {"type": "integer"}, "d": {"type": "integer"}, "dim": {"type": "integer"}},
    ),
    "validate": _obj(
        {
            "ring": {"enum": ["quadric", "rnc", "poly"]},
            "shifts": {"type": "array", "items": {"type": "integer"}},
            "table": BETTI_TABLE,
            "purity": PURITY,
        },
        {"m": {"type": "integer"}, "d": {"type": "integer"}, "dim": {"type": "integer"}},
    ),
    "hk-solve": _obj(
        {
            "twists": {"type": "array", "items": {"type": "integer"}},
            "tail": {"type": "array", "items": {"type": "integer"}},
            "finite": {"type": "array", "items": {"type": "integer"}},
            "tail_raw": {"type": "array", "items": {"type": "string"}},
        }
    ),
    "zelevinsky": _obj(
        {
            "seq": {"type": "string"},
            "sequence": {"type": "string"},
            "n": {"type": "integer"},
            "lambda": PARTITION,
            "mu": PARTITION,
            "minor": VALUE,
            "degrees": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["degree", "terms"],
                    "properties": {
                        "degree": {"type": "integer"},
                        "terms": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "required": ["sigma", "weight", "value"],
                                "properties": {
                                    "sigma": {"type": "array", "items": {"type": "integer"}},
                                    "weight": {"type": "array", "items": {"type": "integer"}},
                                    "value": VALUE,
                                },
                            },
                        },
                    },
                },
            },
            "euler": VALUE,
            "ok": {"type": "boolean"},
        }
    ),
}
