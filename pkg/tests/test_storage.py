import pytest

from storage.json_repo import ArtifactError, JsonArtifactRepository, canonical_json, round_trips


@pytest.fixture
def repo():
    return JsonArtifactRepository()


def test_save_and_load(repo, tmp_path):
    payload = {"schema": 1, "kind": "table", "rows": [[1, 2], [3, 4]]}
    path = repo.save(str(tmp_path / "t.json"), payload)
    assert repo.load(path, "table") == payload
    assert round_trips(repo, path, payload)


def test_output_is_canonical(repo, tmp_path):
    path = tmp_path / "doc.json"
    repo.save(str(path), {"kind": "table", "schema": 1, "b": 2, "a": 1})
    text = path.read_text(encoding="utf-8")
    assert text == canonical_json({"a": 1, "b": 2, "kind": "table", "schema": 1})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')


def test_missing_directory(repo, tmp_path):
    with pytest.raises(ArtifactError):
        repo.save(str(tmp_path / "nowhere" / "x.json"), {"schema": 1, "kind": "table"})


def test_header_is_required(repo, tmp_path):
    with pytest.raises(ArtifactError):
        repo.save(str(tmp_path / "x.json"), {"rows": []})
    with pytest.raises(ArtifactError):
        repo.save(str(tmp_path / "x.json"), {"schema": 2, "kind": "table"})


def test_wrong_kind_on_load(repo, tmp_path):
    path = repo.save(str(tmp_path / "x.json"), {"schema": 1, "kind": "table"})
    with pytest.raises(ArtifactError):
        repo.load(path, "structure_constants")


def test_unreadable_document(repo, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ArtifactError):
        repo.load(str(path))
    with pytest.raises(ArtifactError):
        repo.load(str(tmp_path / "absent.json"))


def test_csv_table(repo, tmp_path):
    path = repo.save_table(str(tmp_path / "t.csv"), ("a", "b"), [(1, 2), (3, 4)])
    with open(path, encoding="utf-8") as f:
        assert f.read() == "a,b\n1,2\n3,4\n"
