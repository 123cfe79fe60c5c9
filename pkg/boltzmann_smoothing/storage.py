"""
Compatibility wrapper for storage API.
"""

from boltzmann_smoothing.storage_ttc.codebase.api import (
    MANIFEST_NAME,
    ArtifactRecord,
    FieldHeader,
    RunArtifacts,
    RunManifest,
    atomic_write_bytes,
    atomic_write_text,
    canonical_hash,
    config_hash,
    csv_text,
    decode_field,
    dumps,
    encode_field,
    file_sha256,
    load_json,
    load_manifest,
    read_csv,
    read_field,
    read_field_header,
    run_directory,
    safe_name,
    save_json,
    to_jsonable,
    verify_artifacts,
    write_csv,
    write_field,
    write_series,
)

__all__ = [
    "FieldHeader",
    "ArtifactRecord",
    "RunManifest",
    "MANIFEST_NAME",
    "encode_field",
    "decode_field",
    "write_field",
    "read_field",
    "read_field_header",
    "to_jsonable",
    "dumps",
    "canonical_hash",
    "save_json",
    "load_json",
    "csv_text",
    "write_csv",
    "write_series",
    "read_csv",
    "RunArtifacts",
    "config_hash",
    "file_sha256",
    "load_manifest",
    "verify_artifacts",
    "safe_name",
    "run_directory",
    "atomic_write_bytes",
    "atomic_write_text",
]
