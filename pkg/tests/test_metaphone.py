from orthower.metaphone import double_metaphone

# Frozen reference codes (primary, secondary), four characters max.
VECTORS = [
    ("philip", "FLP", "FLP"), ("phillip", "FLP", "FLP"),
    ("smith", "SM0", "XMT"), ("smyth", "SM0", "XMT"),
    ("there", "0R", "TR"), ("their", "0R", "TR"),
    ("thompson", "TMPS", "TMPS"), ("knight", "NT", "NT"),
    ("school", "SKL", "SKL"), ("xavier", "SF", "SFR"),
    ("jose", "HS", "HS"), ("caesar", "SSR", "SSR"),
    ("michael", "MKL", "MXL"), ("orchestra", "ARKS", "ARKS"),
    ("architect", "ARKT", "ARKT"), ("edge", "AJ", "AJ"),
    ("rough", "RF", "RF"), ("laugh", "LF", "LF"),
    ("ghost", "KST", "KST"), ("hugh", "H", "H"),
    ("ranger", "RNJR", "RNKR"), ("danger", "TNJR", "TNKR"),
    ("gin", "KN", "JN"), ("aggie", "AJ", "AK"),
    ("geoffrey", "JFR", "KFR"), ("island", "ALNT", "ALNT"),
    ("sugar", "XKR", "SKR"), ("schooner", "SKNR", "SKNR"),
    ("snider", "SNTR", "XNTR"), ("schneider", "XNTR", "SNTR"),
    ("thomas", "TMS", "TMS"), ("wasserman", "ASRM", "FSRM"),
    ("arnow", "ARN", "ARNF"), ("zhao", "J", "J"),
    ("nation", "NXN", "NXN"), ("catch", "KX", "KX"),
    ("witch", "AX", "FX"), ("which", "AX", "AK"),
    ("night", "NT", "NT"), ("knit", "NT", "NT"),
    ("wright", "RT", "RT"), ("write", "RT", "RT"),
    ("right", "RT", "RT"), ("czech", "SK", "XK"),
    ("wachtler", "AKTL", "FKTL"), ("jankelowicz", "JNKL", "ANKL"),
    ("filipowicz", "FLPT", "FLPF"), ("bajador", "PJTR", "PHTR"),
    ("cabrillo", "KPRL", "KPR"), ("gallegos", "KLKS", "KKS"),
]


def test_reference_vectors():
    for word, primary, secondary in VECTORS:
        assert double_metaphone(word) == (primary, secondary), word


def test_empty_input():
    assert double_metaphone("") == ("", "")


def test_case_insensitive():
    assert double_metaphone("Philip") == double_metaphone("philip")


def test_homophone_pairs_share_primary():
    pairs = [("Philip", "Phillip"), ("Smith", "Smyth"), ("there", "their"),
             ("write", "right"), ("night", "knight")]
    for a, b in pairs:
        assert double_metaphone(a)[0] == double_metaphone(b)[0], (a, b)


def test_codes_capped_at_four_characters():
    for word in ["thompson", "gallegos", "inconsequential", "characterisation"]:
        primary, secondary = double_metaphone(word)
        assert len(primary) <= 4
        assert len(secondary) <= 4
