import importlib
import pkgutil
from pathlib import Path

from log_config import logger
from nsbell.sim.features.experiment_registry import registry

FEATURES_PACKAGE = "nsbell.sim.features"


def discover_features() -> int:
    """
    Import every `<feature>/<feature>_command_registry.py` so its commands get registered.

    Returns the number of registries loaded. A registry that fails to import is
    logged and the error propagates, as does a declared dependency on a feature
    that never registered; a partial command table is never served.
    """
    features_dir = Path(__file__).parent
    loaded = 0
    for module in pkgutil.iter_modules([str(features_dir)]):
        if not module.ispkg:
            continue
        registry_name = f"{module.name}_command_registry"
        if not (features_dir / module.name / f"{registry_name}.py").is_file():
            continue
        try:
            importlib.import_module(f"{FEATURES_PACKAGE}.{module.name}.{registry_name}")
        except Exception as e:
            logger.error(f"Feature {module.name} failed to load: {e}")
            raise
        logger.debug(f"Loaded {registry_name}")
        loaded += 1
    missing = registry.missing_dependencies()
    if missing:
        logger.error(f"Features depend on unregistered features: {missing}")
        raise ImportError(f"unregistered feature dependencies: {missing}")
    logger.debug(f"Feature discovery loaded {loaded} registries")
    return loaded
