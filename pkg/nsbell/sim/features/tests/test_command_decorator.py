from unittest.mock import MagicMock, patch

from nsbell.sim.features.command_decorator import command, validate_docstring


def create_func(docstring=None):
    """Create a command-like function with the given docstring."""

    def func(out=None, seed=None):
        return None

    if docstring:
        func.__doc__ = docstring

    return func


COMPLETE_DOCSTRING = """Scan something over a parameter grid.

        Longer description of what the command computes.

        Columns:
            - phi: Measurement angle
            - s_value: CHSH value
        """


class TestValidateDocstring:
    def test_no_docstring(self):
        """A function without docstring gets a single warning"""
        warnings = validate_docstring(create_func(), ["phi"])

        assert len(warnings) == 1
        assert "has no docstring" in warnings[0]

    def test_missing_columns_section(self):
        warnings = validate_docstring(create_func("Short summary line here.\n\nMore text.\nEven more."), ["phi"])

        assert any("missing 'Columns:' section" in warning for warning in warnings)

    def test_complete_docstring(self):
        warnings = validate_docstring(create_func(COMPLETE_DOCSTRING), ["phi", "s_value"])

        assert warnings == []

    def test_undocumented_column(self):
        """Every CSV column must appear as a bullet in the Columns section"""
        warnings = validate_docstring(create_func(COMPLETE_DOCSTRING), ["phi", "s_value", "reject_rate"])

        assert len(warnings) == 1
        assert "reject_rate" in warnings[0]


class TestCommandDecorator:
    def test_registers_with_app_and_registry(self):
        """The decorated function is added to the typer app and the registry"""
        with patch("nsbell.sim.features.command_decorator.app") as mock_app, patch(
            "nsbell.sim.features.command_decorator.registry"
        ) as mock_registry:
            register = MagicMock()
            mock_app.command.return_value = register
            func = create_func(COMPLETE_DOCSTRING)

            decorated = command("chsh", "scan", columns=["phi", "s_value"])(func)

        assert decorated is func
        mock_app.command.assert_called_once_with("scan")
        register.assert_called_once_with(func)
        mock_registry.register_command.assert_called_once_with("chsh", "scan", func, ["phi", "s_value"])

    def test_unknown_feature_only_warns(self):
        with patch("nsbell.sim.features.command_decorator.app"), patch(
            "nsbell.sim.features.command_decorator.registry"
        ) as mock_registry, patch("nsbell.sim.features.command_decorator.logger") as mock_logger:
            mock_registry.register_command.side_effect = ValueError("unknown")

            command("nope", "scan", columns=["phi", "s_value"])(create_func(COMPLETE_DOCSTRING))

        assert any("unknown feature 'nope'" in call.args[0] for call in mock_logger.warning.call_args_list)

    def test_validation_warnings_logged(self):
        with patch("nsbell.sim.features.command_decorator.app"), patch(
            "nsbell.sim.features.command_decorator.registry"
        ), patch("nsbell.sim.features.command_decorator.logger") as mock_logger:
            command("chsh", "bare", columns=["phi"])(create_func())

        mock_logger.warning.assert_called()
