import importlib

from nsbell.cli_main import run


class TestRun:
    def test_help_exits_0(self, capsys):
        assert run(["--help"]) == 0

        out = capsys.readouterr().out
        for name in ("chsh", "misalign", "twirl-converge", "orthogonality", "biref", "tetrad-check"):
            assert name in out

    def test_command_help_lists_columns(self, capsys):
        assert run(["chsh", "--help"]) == 0

        assert "s_logical_mc" in capsys.readouterr().out

    def test_unknown_command_exits_1(self):
        assert run(["no-such-command"]) == 1

    def test_verbose_flag(self, tmp_path):
        assert run(["--verbose", "tetrad-check", "--out", str(tmp_path / "t.csv"), "--radii", "3"]) == 0

    def test_broken_registry_exits_2(self, monkeypatch, tmp_path):
        real_import = importlib.import_module

        def failing_import(name, *args, **kwargs):
            if name.endswith("spacetime_command_registry"):
                raise RuntimeError("spacetime registry is broken")
            return real_import(name, *args, **kwargs)

        monkeypatch.setattr(importlib, "import_module", failing_import)
        assert run(["tetrad-check", "--out", str(tmp_path / "t.csv"), "--radii", "3"]) == 2
        assert not (tmp_path / "t.csv").exists()
