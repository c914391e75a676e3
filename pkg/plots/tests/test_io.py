"""Schema-checked CSV loading."""

import os

import numpy as np
import pytest

from plots.io import SchemaError, load_drift, load_grid

DATA = os.path.join(os.path.dirname(__file__), "data")


class TestLoadGrid:
    def test_fixture_roundtrip(self):
        table = load_grid(os.path.join(DATA, "grid.csv"))
        assert table.diams.tolist() == [2, 3, 4]
        assert table.ccs.tolist() == [0.2, 0.3]
        assert table.success.shape == (2, 3)
        assert table.trials == 8
        # zero-success cells carry no diversity
        assert np.isnan(table.diversity[:, 0]).all()
        assert not np.isnan(table.diversity[:, 1]).any()

    def test_rejects_wrong_magic(self, tmp_path):
        path = tmp_path / "grid.csv"
        path.write_text("# something-else v9\ndiam,cc\n")
        with pytest.raises(SchemaError, match="expected"):
            load_grid(path)

    def test_rejects_wrong_header(self, tmp_path):
        path = tmp_path / "grid.csv"
        path.write_text("# gensemble-csv grid v1\ndiam,cc,oops\n")
        with pytest.raises(SchemaError, match="header"):
            load_grid(path)

    def test_rejects_empty_grid(self, tmp_path):
        path = tmp_path / "grid.csv"
        path.write_text(
            "# gensemble-csv grid v1\n"
            "diam,cc,density,success_ratio,diversity,trials,reason\n"
        )
        with pytest.raises(SchemaError, match="empty"):
            load_grid(path)

    def test_rejects_non_rectangular(self, tmp_path):
        path = tmp_path / "grid.csv"
        path.write_text(
            "# gensemble-csv grid v1\n"
            "diam,cc,density,success_ratio,diversity,trials,reason\n"
            "2,0.2,0.25,0.5,,8,\n"
            "2,0.3,0.25,0.5,,8,\n"
            "3,0.2,0.25,0.5,,8,\n"
        )
        with pytest.raises(SchemaError, match="rectangular"):
            load_grid(path)

    def test_single_cell_grid(self, tmp_path):
        path = tmp_path / "grid.csv"
        path.write_text(
            "# gensemble-csv grid v1\n"
            "diam,cc,density,success_ratio,diversity,trials,reason\n"
            "3,0.4,0.2,0.75,0.12,100,\n"
        )
        table = load_grid(path)
        assert table.success.shape == (1, 1)
        assert table.success[0, 0] == 0.75


class TestLoadDrift:
    def test_fixture(self):
        table = load_drift(os.path.join(DATA, "drift_mcmc.csv"))
        assert table.method == "mcmc"
        assert len(table.drifts) == 12
        assert (table.drifts >= 0).all()

    def test_rejects_empty(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text("# gensemble-csv drift v1\nmethod,seed_id,step,drift\n")
        with pytest.raises(SchemaError, match="empty"):
            load_drift(path)

    def test_rejects_mixed_methods(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text(
            "# gensemble-csv drift v1\nmethod,seed_id,step,drift\n"
            "mcmc,0,1,0.1\nhybrid,0,1,0.2\n"
        )
        with pytest.raises(SchemaError, match="mixed"):
            load_drift(path)
