"""JSON schemas for the command-line payloads."""

_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_NONNEG_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}

_CONFIG = {
    "type": "object",
    "required": ["ell", "m"],
    "properties": {"ell": {"type": "integer"}, "m": {"type": "integer"}, "weight": _NONNEG_LIST},
}

WITNESS = {
    "type": "object",
    "required": ["kind", "r", "s", "path", "lhs", "bound"],
    "properties": {
        "kind": {"enum": ["dc", "ic"]},
        "r": {"type": "integer", "minimum": 0},
        "s": {"type": "integer", "minimum": 0},
        "path": {"type": "array", "items": {**_INT_LIST, "minItems": 2, "maxItems": 2}},
        "lhs": {"type": "integer"},
        "bound": {"type": "integer"},
    },
}

VERDICT = {
    "type": "object",
    "required": ["config", "monomial", "dc", "ic", "verdict", "witness"],
    "properties": {
        "config": _CONFIG,
        "monomial": {"type": "string"},
        "dc": {"type": "boolean"},
        "ic": {"type": "boolean"},
        "verdict": {"type": "boolean"},
        "witness": {"oneOf": [{"type": "null"}, WITNESS]},
    },
}

SERIES = {
    "type": "object",
    "required": ["config", "n_max", "series"],
    "properties": {
        "config": _CONFIG,
        "n_max": {"type": "integer", "minimum": 0},
        "series": {**_NONNEG_LIST, "minItems": 1},
        "oracle": {"oneOf": [{"type": "null"}, _NONNEG_LIST]},
        "oracle_agrees": {"type": ["boolean", "null"]},
    },
}

BASIS = {
    "type": "object",
    "required": ["config", "n_max", "degrees"],
    "properties": {
        "config": _CONFIG,
        "n_max": {"type": "integer", "minimum": 0},
        "degrees": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "monomials"],
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "monomials": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
    },
}

CHAINS = {
    "type": "object",
    "required": ["monomial", "width", "antichain", "chains"],
    "properties": {
        "monomial": {"type": "string"},
        "width": {"type": "integer", "minimum": 0},
        "antichain": {"type": "string"},
        "chains": {"type": "array", "items": {"type": "string"}},
    },
}

FACTORIZATION = {
    "type": "object",
    "required": ["config", "monomial", "admissible", "factors"],
    "properties": {
        "config": _CONFIG,
        "monomial": {"type": "string"},
        "admissible": {"type": "boolean"},
        "factors": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["tag", "monomial"],
                        "properties": {"tag": {"type": "integer", "minimum": 0}, "monomial": {"type": "string"}},
                    },
                },
            ]
        },
    },
}

LEADING_TERM = {
    "type": "object",
    "required": ["rows", "cols", "n", "k", "monomial"],
    "properties": {
        "rows": _INT_LIST,
        "cols": _INT_LIST,
        "n": {"type": "integer"},
        "k": {"type": "integer", "minimum": 1},
        "monomial": {"type": "string"},
    },
}

REPORT = {
    "type": "object",
    "required": ["config", "k", "dim", "expected_dim", "labels"],
    "properties": {
        "config": _CONFIG,
        "k": {"type": "integer", "minimum": 1},
        "dim": {"type": "integer"},
        "expected_dim": {"type": "integer"},
        "labels": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "dim", "support_ok", "positive_ok", "leading_term_ok"],
                "properties": {
                    "label": {
                        "type": "object",
                        "required": ["rows", "cols"],
                        "properties": {"rows": _INT_LIST, "cols": _INT_LIST},
                    },
                    "dim": {"type": "integer"},
                    "support_ok": {"type": "boolean"},
                    "positive_ok": {"type": "boolean"},
                    "leading_term_ok": {"type": "boolean"},
                },
            },
        },
    },
}

MU = {
    "type": "object",
    "required": ["config", "f", "mu"],
    "properties": {"config": _CONFIG, "f": {"type": "integer", "minimum": 1}, "mu": {"type": "string"}},
}

SELFCHECK = {
    "type": "object",
    "required": ["checks", "passed"],
    "properties": {
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "cases"],
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "cases": {"type": "integer", "minimum": 0},
                },
            },
        },
        "passed": {"type": "boolean"},
    },
}

MANIFEST = {
    "type": "object",
    "required": ["version", "command", "config", "config_sha256"],
    "properties": {
        "version": {"type": "string"},
        "command": {"type": "string"},
        "config": {"type": "object"},
        "config_sha256": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
    },
}

BY_COMMAND = {
    "check": VERDICT,
    "enumerate": BASIS,
    "character": SERIES,
    "chains": CHAINS,
    "factor": FACTORIZATION,
    "leading-term": LEADING_TERM,
    "relations-verify": REPORT,
    "mu": MU,
    "selfcheck": SELFCHECK,
}
