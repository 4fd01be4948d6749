"""Random generation, hardness reductions and instance files."""

from guillotine_layout.instances._generator import (
    MAX_AREA,
    PRNG_NAME,
    GeneratorConfig,
    generate,
    sample_areas,
)
from guillotine_layout.instances._io import (
    FORMAT_VERSION,
    atomic_write_text,
    instance_from_dict,
    read_instance,
    read_json_document,
    read_two_partition,
    write_instance,
    write_two_partition,
)
from guillotine_layout.instances._reductions import (
    TwoPartitionInstance,
    reduce_2partition_to_aspect,
    reduce_2partition_to_perimax,
    solve_2partition_dp,
)

__all__ = [
    "FORMAT_VERSION",
    "MAX_AREA",
    "PRNG_NAME",
    "GeneratorConfig",
    "TwoPartitionInstance",
    "atomic_write_text",
    "generate",
    "instance_from_dict",
    "read_instance",
    "read_json_document",
    "read_two_partition",
    "reduce_2partition_to_aspect",
    "reduce_2partition_to_perimax",
    "sample_areas",
    "solve_2partition_dp",
    "write_instance",
    "write_two_partition",
]
