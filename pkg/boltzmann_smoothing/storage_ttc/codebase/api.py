"""
Public API surface for storage tasks.
"""

from boltzmann_smoothing.storage_ttc.tasks.csv_tasks import (
    csv_text,
    read_csv,
    write_csv,
    write_series,
)
from boltzmann_smoothing.storage_ttc.tasks.field_tasks import (
    decode_field,
    encode_field,
    read_field,
    read_field_header,
    write_field,
)
from boltzmann_smoothing.storage_ttc.tasks.json_tasks import (
    canonical_hash,
    dumps,
    load_json,
    save_json,
    to_jsonable,
)
from boltzmann_smoothing.storage_ttc.tasks.manifest_tasks import (
    RunArtifacts,
    config_hash,
    file_sha256,
    load_manifest,
    verify_artifacts,
)
from boltzmann_smoothing.storage_ttc.tools.manifest_tools import (
    MANIFEST_NAME,
    ArtifactRecord,
    FieldHeader,
    RunManifest,
)
from boltzmann_smoothing.storage_ttc.tools.path_tools import (
    atomic_write_bytes,
    atomic_write_text,
    run_directory,
    safe_name,
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
