"""
Simple response utilities

Every CLI command answers with one JSON envelope on stdout.
"""

import json


def success_response(data, message="Success", total=None, meta=None):
    """Create standardized success response"""
    response = {"success": True, "message": message, "data": data}

    if total is not None:
        response["total"] = total
    if meta is not None:
        response["meta"] = meta

    return response


def error_response(message, code=1, data=None):
    """Create standardized error response"""
    response = {"success": False, "error": message, "code": code}

    if data is not None:
        response["data"] = data

    return response, code


def render(response) -> str:
    """Serialize an envelope for stdout"""
    return json.dumps(response, indent=2, ensure_ascii=False)
