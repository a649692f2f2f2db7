"""JSON Schema documents for the machine-readable outputs.

Plain dictionaries, so any draft-07 validator can consume them.
"""

_INT_LIST = {"type": "array", "items": {"type": "integer", "minimum": 1}}

BERGE_RESULT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["length", "base", "edges", "exhaustive"],
    "properties": {
        "length": {"type": "integer", "minimum": 0},
        "base": _INT_LIST,
        "edges": {"type": "array", "items": _INT_LIST},
        "exhaustive": {"type": "boolean"},
        "geq_k": {"type": "boolean"},
    },
}

SDRP = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["sdrp", "residual"],
    "properties": {
        "sdrp": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["pair", "edge"],
                "properties": {
                    "pair": {**_INT_LIST, "minItems": 2, "maxItems": 2},
                    "edge": _INT_LIST,
                },
                "additionalProperties": False,
            },
        },
        "residual": {"type": "array", "items": _INT_LIST},
        "residual_shadow": {"type": "array", "items": {**_INT_LIST, "minItems": 2, "maxItems": 2}},
        "surplus": {"type": "boolean"},
    },
}

SEARCH_REPORT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["params", "max_edges", "bound_numerator", "bound_denominator",
                 "witness_hyg", "exhaustive", "classes_visited", "elapsed_ms"],
    "properties": {
        "params": {
            "type": "object",
            "required": ["n", "r", "k", "mode"],
            "properties": {
                "n": {"type": "integer"},
                "r": {"type": "integer"},
                "k": {"type": "integer"},
                "mode": {"enum": ["theorem", "conjecture"]},
            },
        },
        "max_edges": {"type": "integer", "minimum": 0},
        "bound_numerator": {"type": "integer"},
        "bound_denominator": {"type": "integer", "minimum": 1},
        "within_bound": {"type": "boolean"},
        "witness_hyg": {"type": "string"},
        "exhaustive": {"type": "boolean"},
        "classes_visited": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "integer", "minimum": 0},
    },
}

VERDICT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["claim", "status", "equality"],
    "properties": {
        "claim": {"type": "string"},
        "status": {"enum": ["holds", "violation", "not-applicable"]},
        "equality": {"type": "boolean"},
    },
}
