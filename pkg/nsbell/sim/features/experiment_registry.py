from typing import Dict, List, Callable, Optional
from dataclasses import dataclass, field
from log_config import logger


@dataclass
class FeatureMetadata:
    """Metadata for a simulator feature slice"""
    name: str
    description: str
    version: str = "1.0.0"
    dependencies: List[str] = field(default_factory=list)


@dataclass
class CommandEntry:
    """A CLI command owned by a feature, with the CSV columns it writes"""
    name: str
    func: Callable
    columns: List[str] = field(default_factory=list)


class ExperimentRegistry:
    """Registry for simulator features and the batch commands they expose"""

    def __init__(self):
        self._features: Dict[str, FeatureMetadata] = {}
        self._commands: Dict[str, Dict[str, CommandEntry]] = {}

    def register_feature(self, feature_id: str, metadata: FeatureMetadata) -> None:
        """Register a feature with the registry"""
        logger.debug(f"Registering feature: {feature_id} ({metadata.name})")
        self._features[feature_id] = metadata
        if feature_id not in self._commands:
            self._commands[feature_id] = {}

    def register_command(
        self,
        feature_id: str,
        name: str,
        func: Callable,
        columns: Optional[List[str]] = None,
    ) -> None:
        """Register a command function with a feature"""
        if feature_id not in self._features:
            raise ValueError(f"Feature {feature_id} is not registered")

        for owner, commands in self._commands.items():
            if name in commands and owner != feature_id:
                raise ValueError(f"Command {name} is already owned by feature {owner}")

        logger.debug(f"Registering command: {name} with feature: {feature_id}")
        self._commands[feature_id][name] = CommandEntry(name, func, list(columns or []))

    def get_command(self, name: str) -> Optional[CommandEntry]:
        """Look up a command by name across all features"""
        for commands in self._commands.values():
            if name in commands:
                return commands[name]
        return None

    def get_commands(self, feature_id: Optional[str] = None) -> List[CommandEntry]:
        """Get the commands of one feature, or of all features sorted by name"""
        if feature_id:
            return sorted(self._commands.get(feature_id, {}).values(), key=lambda c: c.name)
        entries = [c for commands in self._commands.values() for c in commands.values()]
        return sorted(entries, key=lambda c: c.name)

    def get_feature_metadata(self, feature_id: str) -> Optional[FeatureMetadata]:
        """Get metadata for a feature"""
        return self._features.get(feature_id)

    def missing_dependencies(self) -> Dict[str, List[str]]:
        """Declared dependencies that are not registered features, by dependent feature"""
        missing = {}
        for feature_id, metadata in self._features.items():
            absent = [dep for dep in metadata.dependencies if dep not in self._features]
            if absent:
                missing[feature_id] = absent
        return missing

    def get_command_count(self, feature_id: Optional[str] = None) -> int:
        """
        Get the number of commands registered, either for a specific feature or total.

        Args:
            feature_id: Optional feature ID to count commands for

        Returns:
            Number of commands
        """
        if feature_id:
            return len(self._commands.get(feature_id, {}))
        return sum(len(commands) for commands in self._commands.values())

    def __str__(self) -> str:
        """String representation of the registry"""
        return (
            f"ExperimentRegistry: {len(self._features)} features, "
            f"{self.get_command_count()} commands registered"
        )


# Create global registry instance
registry = ExperimentRegistry()
