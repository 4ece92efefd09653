"""
This is the hashes module.  Reports are fingerprinted by the md5 of their
canonical JSON rendering, so reruns can be compared and stored results
deduplicated.
"""
import hashlib
import json


def canonical_json(obj):
    """
    Canonical text form of a report: sorted keys, no whitespace.

    Parameters
    ----------
    obj : dict or list
        JSON-serializable report

    Returns
    -------
    str
    """
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))


def report_digest(obj):
    """
    Generates the md5 hex digest of a report.

    Parameters
    ----------
    obj : dict or list
        JSON-serializable report

    Returns
    -------
    str
        md5 checksum of the canonical JSON
    """
    hashobj = hashlib.md5()
    hashobj.update(canonical_json(obj).encode('utf8'))
    return hashobj.hexdigest()
