from nsbell.sim.features.experiment_registry import FeatureMetadata, registry

# Register the feature before its commands
registry.register_feature(
    "spacetime",
    FeatureMetadata(
        name="Spacetime",
        description="Tetrad identity checks and the gravity-induced birefringence phase",
        version="1.0.0",
        dependencies=["su2rep", "twirl", "chsh"],
    ),
)

from nsbell.sim.features.spacetime.tools import biref_tool, tetrad_check_tool  # noqa: E402,F401
