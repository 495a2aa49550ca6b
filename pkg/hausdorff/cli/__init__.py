from .classify import (
    AnalysisRequest,
    Conclusion,
    NetRequest,
    PropertyVerdict,
    Report,
    classify_command,
    synthesize,
)
from .parse import parse_factored_poly, parse_rational_list
from .serialize import report_to_json, report_to_text, to_jsonable
