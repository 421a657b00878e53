import pytest

from profilelink import Category, FieldKey, SchemeKind, binary_scheme, category_of, hierarchy_scheme
from profilelink.errors import ConfigError
from profilelink.weights import CATEGORY_FIELDS, WeightScheme, load_weights, parse_weights


def test_partition_sizes():
    sizes = {c: len(fs) for c, fs in CATEGORY_FIELDS.items()}
    assert sizes == {
        Category.EDUCATION_PROFESSIONAL: 6, Category.PERSONAL: 5,
        Category.INTEREST: 4, Category.CONTACT: 5,
    }
    flat = [f for fs in CATEGORY_FIELDS.values() for f in fs]
    assert sorted(flat) == sorted(FieldKey) and len(flat) == 20


@pytest.mark.parametrize("field,category", [
    ("city", Category.CONTACT),
    ("smoking", Category.INTEREST),
    ("occupation", Category.EDUCATION_PROFESSIONAL),
    ("gender", Category.PERSONAL),
])
def test_category_of(field, category):
    assert category_of(field) is category
    assert FieldKey(field).category is category


def test_binary_defaults_and_mask():
    assert set(binary_scheme().weights.values()) == {1}
    masked = binary_scheme({"city": 0})
    assert masked.weight_of("city") == 0
    assert all(w == 1 for f, w in masked.weights.items() if f is not FieldKey.CITY)
    assert masked.kind is SchemeKind.BINARY


def test_binary_rejects_non_binary_weight():
    with pytest.raises(ValueError):
        binary_scheme({"city": 2})


def test_hierarchy_weights():
    h = hierarchy_scheme()
    expected = {
        "hometown": 3, "pin_code": 4, "city": 3, "state": 2, "country": 1,
        "education": 1, "degree": 2, "college_university": 3,
        "industry": 1, "occupation": 2, "company": 3,
    }
    for f, w in expected.items():
        assert h.weight_of(f) == w
    for cat in (Category.PERSONAL, Category.INTEREST):
        assert all(h.weight_of(f) == 1 for f in CATEGORY_FIELDS[cat])


@pytest.mark.parametrize("chain", [
    ("country", "state", "city"),
    ("education", "degree", "college_university"),
    ("industry", "occupation", "company"),
])
def test_hierarchy_increases_with_depth(chain):
    h = hierarchy_scheme()
    weights = [h.weight_of(f) for f in chain]
    assert weights == sorted(weights) and len(set(weights)) == 3


def test_hierarchy_kind_is_guarded():
    with pytest.raises(ValueError):
        WeightScheme("hierarchy", {f: 1 for f in FieldKey})


def test_overrides_change_kind():
    assert binary_scheme().with_overrides({"city": 0}).kind is SchemeKind.BINARY
    assert binary_scheme().with_overrides({"city": 5}).kind is SchemeKind.CUSTOM
    custom = hierarchy_scheme().with_overrides({"gender": 7})
    assert custom.kind is SchemeKind.CUSTOM and custom.weight_of("gender") == 7


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        binary_scheme().with_overrides({"city": -1})


def test_parse_weights_file(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("# contact only\ncity=5\n\npin_code = 0\n")
    scheme = load_weights(path, hierarchy_scheme())
    assert scheme.weight_of("city") == 5 and scheme.weight_of("pin_code") == 0
    assert scheme.weight_of("state") == 2


@pytest.mark.parametrize("text", ["city", "colour=3", "city=-1", "city=x", "city=1\ncity=2"])
def test_parse_weights_errors(text):
    with pytest.raises(ConfigError) as exc:
        parse_weights(text, source="w.txt")
    assert exc.value.lineno is not None
