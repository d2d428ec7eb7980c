"""JSON Schemas for every ``--format json`` / JSON-lines output of the CLI."""

_COEFFS = {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+$"}}
_INT_STR = {"type": "string", "pattern": r"^-?\d+$"}
_PARTS = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1}

SCAN_RECORD = {
    "type": "object",
    "required": ["n", "partition", "coeffs", "lc", "contiguous", "rr", "checks", "ms"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "partition": _PARTS,
        "coeffs": _COEFFS,
        "lc": {"type": "boolean"},
        "contiguous": {"type": "boolean"},
        "rr": {"type": "boolean"},
        "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "ms": {"type": "integer", "minimum": 0},
        "reduced_from": {"oneOf": [_PARTS, {"type": "null"}]},
        "products": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

NUMBER = {
    "type": "object",
    "required": ["n", "k", "value"],
    "properties": {
        "n": {"type": "integer"},
        "k": {"type": "integer"},
        "value": _INT_STR,
        "method": {"enum": ["closed", "brute"]},
    },
    "additionalProperties": False,
}

FN = {
    "type": "object",
    "required": ["n", "method", "coeffs", "text"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "method": {"enum": ["closed", "recurrence", "enum"]},
        "coeffs": _COEFFS,
        "text": {"type": "string"},
    },
    "additionalProperties": False,
}

FPOLY = {
    "type": "object",
    "required": ["partition", "coeffs", "text", "reduced_from", "multiplier"],
    "properties": {
        "partition": _PARTS,
        "coeffs": _COEFFS,
        "text": {"type": "string"},
        "reduced_from": {"oneOf": [_PARTS, {"type": "null"}]},
        "multiplier": _INT_STR,
    },
    "additionalProperties": False,
}

_INTERVAL = {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}

CERTIFY = {
    "type": "object",
    "required": ["polynomial", "coeffs"],
    "properties": {
        "polynomial": {"type": "string"},
        "coeffs": _COEFFS,
        "lc": {
            "type": "object",
            "required": ["log_concave", "witness", "contiguous"],
            "properties": {
                "log_concave": {"type": "boolean"},
                "witness": {"type": ["integer", "null"]},
                "contiguous": {"type": "boolean"},
            },
        },
        "rr": {
            "type": "object",
            "required": ["polynomial", "coeffs", "squarefree_degree", "distinct_real_roots",
                         "real_rooted", "isolating_intervals"],
            "properties": {
                "polynomial": {"type": "string"},
                "coeffs": _COEFFS,
                "squarefree_degree": {"type": "integer"},
                "distinct_real_roots": {"type": "integer"},
                "real_rooted": {"type": "boolean"},
                "isolating_intervals": {"type": "array", "items": _INTERVAL},
            },
        },
        "hb": {
            "type": "object",
            "required": ["mode", "even_part", "odd_part", "interlacing", "ok"],
            "properties": {
                "mode": {"enum": ["weak", "strict"]},
                "ok": {"type": "boolean"},
            },
        },
    },
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "required": ["n_max", "ok", "identities"],
    "properties": {
        "n_max": {"type": "integer"},
        "ok": {"type": "boolean"},
        "identities": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "ok", "expected_fail", "as_expected", "checked", "counterexample"],
                "properties": {
                    "name": {"type": "string"},
                    "ok": {"type": "boolean"},
                    "expected_fail": {"type": "boolean"},
                    "as_expected": {"type": "boolean"},
                    "checked": {"type": "integer"},
                    "counterexample": {"type": ["string", "null"]},
                },
            },
        },
    },
    "additionalProperties": False,
}

BY_COMMAND = {
    "scan": SCAN_RECORD,
    "stirling": NUMBER,
    "hultman": NUMBER,
    "fn": FN,
    "fpoly": FPOLY,
    "certify": CERTIFY,
    "verify": VERIFY,
}
