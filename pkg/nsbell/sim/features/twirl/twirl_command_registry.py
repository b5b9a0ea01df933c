from nsbell.sim.features.experiment_registry import FeatureMetadata, registry

# Register the feature before its commands
registry.register_feature(
    "twirl",
    FeatureMetadata(
        name="Twirl",
        description="Collective depolarization channels, exact and Monte Carlo",
        version="1.0.0",
        dependencies=["su2rep"],
    ),
)

from nsbell.sim.features.twirl.tools import twirl_converge_tool  # noqa: E402,F401
