from nsbell.sim.features.experiment_registry import FeatureMetadata, registry

# Register the feature before its commands
registry.register_feature(
    "chsh",
    FeatureMetadata(
        name="CHSH",
        description="Bell tests of bare and encoded singlets: angle scans and misalignment scans",
        version="1.0.0",
        dependencies=["su2rep", "twirl"],
    ),
)

from nsbell.sim.features.chsh.tools import chsh_scan_tool, misalign_tool  # noqa: E402,F401
