from nsbell.sim.features.experiment_registry import FeatureMetadata, registry

# Register the feature before its commands
registry.register_feature(
    "su2rep",
    FeatureMetadata(
        name="SU(2) representations",
        description="Haar sampling, Wigner matrices and Schur bases",
        version="1.0.0",
    ),
)

from nsbell.sim.features.su2rep.tools import orthogonality_tool  # noqa: E402,F401
