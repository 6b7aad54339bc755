"""
JSON Schemas for every document the CLI emits with --json, plus the
validation-suite result files.
"""
from jsonschema import validate

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}

INVARIANTS_SCHEMA = {
    "type": "object",
    "required": ["scheme", "p", "b", "sig", "eta"],
    "properties": {
        "scheme": {"type": "string"},
        "p": {"type": "integer"},
        "b": {"type": "integer"},
        "sig": {"type": "integer"},
        "eta": {"type": "integer", "minimum": 0},
    },
}

PROFILE_SCHEMA = {
    "type": "object",
    "required": ["scheme", "nul", "intervals", "points", "lines"],
    "properties": {
        "scheme": {"type": "string"},
        "nul": {"type": "integer"},
        "intervals": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["lo", "hi", "sig", "eta"],
                "properties": {
                    "lo": RATIONAL,
                    "hi": RATIONAL,
                    "sig": {"type": "integer"},
                    "eta": {"type": "integer"},
                },
            },
        },
        "points": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["x", "sig", "eta"],
                "properties": {
                    "x": RATIONAL,
                    "sig": {"type": "integer"},
                    "eta": {"type": ["integer", "null"]},
                },
            },
        },
        "lines": {"type": "array", "items": {"type": "string"}},
    },
}

WITNESS_SCHEMA = {
    "type": "object",
    "required": ["p", "b", "sig", "eta", "bound"],
    "properties": {
        "p": {"type": "integer"},
        "b": {"type": "integer"},
        "sig": {"type": "integer"},
        "eta": {"type": "integer"},
        "bound": {"type": "integer"},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["scheme", "m", "rm_pass", "verdict", "witness", "scan"],
    "properties": {
        "scheme": {"type": "string"},
        "m": {"type": "integer", "minimum": 1},
        "rm_pass": {"type": "boolean"},
        "verdict": {"enum": ["not_prohibited", "prohibited", "parity_mismatch"]},
        "bound": {"type": "integer"},
        "witness": {"oneOf": [{"type": "null"}, WITNESS_SCHEMA]},
        "scan": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "where", "p", "b", "sig", "eta", "lhs"],
                "properties": {"kind": {"enum": ["interval", "point", "exceptional"]}},
            },
        },
    },
}

FAMILY_SCHEMA = {
    "type": "object",
    "required": ["family", "k", "degree", "scheme", "alpha", "beta"],
    "properties": {
        "family": {"enum": ["odd_nest", "double_nest"]},
        "k": {"type": "integer"},
        "degree": {"type": "integer"},
        "scheme": {"type": "string"},
        "alpha": {"type": "integer"},
        "beta": {"type": "integer"},
        "report": {"oneOf": [{"type": "null"}, REPORT_SCHEMA]},
    },
}

TREE_SCHEMA = {
    "type": "object",
    "required": ["vertices", "edges", "arrows"],
    "properties": {
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "weight", "role"],
                "properties": {
                    "id": {"type": "integer"},
                    "weight": {"type": "integer"},
                    "role": {"enum": ["u1", "u2", "u3", "region", "oval", "arrowhead", "generic"]},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "arrows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["tail", "sign"],
                "properties": {
                    "tail": {"type": "integer"},
                    "sign": {"enum": [1, -1]},
                    "head": {"type": "integer"},
                },
            },
        },
    },
}

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["scheme", "variant", "tree", "matrix", "s", "delta", "c"],
    "properties": {
        "scheme": {"type": "string"},
        "variant": {"enum": ["gamma", "gamma_plus", "gamma_hat"]},
        "tree": TREE_SCHEMA,
        "matrix": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "s": {"type": "array", "items": {"type": "integer"}},
        "delta": {"type": "integer"},
        "c": {"type": "array", "items": {"type": "integer"}},
        "c_plus": {"type": "array", "items": {"type": "integer"}},
    },
}

CG_INPUT_SCHEMA = {
    "type": "object",
    "required": ["weights", "edges", "charvec"],
    "additionalProperties": False,
    "properties": {
        "weights": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "charvec": {"type": "array", "items": {"type": "integer"}},
        "p": {"type": "integer"},
    },
}

CG_SCHEMA = {
    "type": "object",
    "required": ["p", "sigma", "eta"],
    "properties": {
        "p": {"type": "integer"},
        "sigma": RATIONAL,
        "eta": {"type": "integer"},
    },
}

LINKING_SCHEMA = {
    "type": "object",
    "required": ["scheme", "labels", "matrix"],
    "properties": {
        "scheme": {"type": "string"},
        "labels": {"type": "array", "items": {"type": "string"}},
        "matrix": {"type": "array", "items": {"type": "array", "items": RATIONAL}},
    },
}

SUITE_SCHEMA = {
    "type": "object",
    "required": ["suite", "checks", "failures", "elapsed_s", "budget_s", "passed"],
    "properties": {
        "suite": {"type": "string"},
        "checks": {"type": "integer", "minimum": 0},
        "failures": {"type": "array"},
        "elapsed_s": {"type": "number"},
        "budget_s": {"type": "number"},
        "passed": {"type": "boolean"},
    },
}

SCHEMAS = {
    "invariants": INVARIANTS_SCHEMA,
    "profile": PROFILE_SCHEMA,
    "check": REPORT_SCHEMA,
    "family": FAMILY_SCHEMA,
    "graph": GRAPH_SCHEMA,
    "cg": CG_SCHEMA,
    "linking": LINKING_SCHEMA,
    "suite": SUITE_SCHEMA,
}


def check_document(kind, document):
    """Validate `document` against the schema registered under `kind`"""
    validate(instance=document, schema=SCHEMAS[kind])
    return document
