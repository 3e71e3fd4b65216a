from orthower.align import OperationKind, RouteElement, align
from orthower.classify import ErrorClass, classify_pair, classify_route

from conftest import number, punct, word


def test_punctuation_pair():
    assert classify_pair(punct(","), punct(".")) is ErrorClass.PUNCTUATION


def test_cross_type_is_punctuation_class():
    assert classify_pair(punct(","), word("cat")) is ErrorClass.PUNCTUATION
    assert classify_pair(word("cat"), punct(".")) is ErrorClass.PUNCTUATION


def test_capitalisation():
    assert classify_pair(word("Cat"), word("cat")) is ErrorClass.CAPITALISATION
    assert classify_pair(word("QUIET"), word("quiet")) is ErrorClass.CAPITALISATION


def test_compound():
    assert classify_pair(word("ice-cream"), word("icecream")) is ErrorClass.COMPOUND


def test_number():
    assert classify_pair(number("21"), number("22")) is ErrorClass.NUMBER
    assert classify_pair(number("2000"), word("two")) is ErrorClass.NUMBER
    assert classify_pair(word("cat"), number("$5")) is ErrorClass.NUMBER


def test_prefix_suffix_affix():
    assert classify_pair(word("walk"), word("walked")) is ErrorClass.SUFFIX
    assert classify_pair(word("walked"), word("walk")) is ErrorClass.SUFFIX
    assert classify_pair(word("do"), word("undo")) is ErrorClass.PREFIX
    assert classify_pair(word("standing"), word("outstandingly")) is ErrorClass.AFFIX


def test_stem():
    # different surface forms, same Porter stem, no containment
    assert classify_pair(word("relational"), word("relate")) is ErrorClass.STEM


def test_homophone():
    assert classify_pair(word("there"), word("their")) is ErrorClass.HOMOPHONE
    assert classify_pair(word("write"), word("right")) is ErrorClass.HOMOPHONE


def test_word_fallback():
    assert classify_pair(word("cat"), word("dog")) is ErrorClass.WORD


def test_capitalisation_beats_stem():
    # "Cat"/"cat" have equal stems but must be a capitalisation error
    assert classify_pair(word("Cat"), word("cat")) is ErrorClass.CAPITALISATION


def test_containment_beats_stem():
    # equal stems and containment: containment is the more specific class
    assert classify_pair(word("walks"), word("walk")) is ErrorClass.SUFFIX


def test_diacritics_folded_for_homophones():
    assert classify_pair(word("Fahre"), word("Fähre")) is ErrorClass.HOMOPHONE


def test_loose_homophone_flag():
    # primaries differ but primary/secondary codes cross-match
    a, b = word("snider"), word("schneider")
    assert classify_pair(a, b) is not ErrorClass.HOMOPHONE
    assert classify_pair(a, b, homophone_loose=True) is ErrorClass.HOMOPHONE


def test_classify_route_fills_substitutions_only():
    ref = [word("Cat"), word("sat"), punct(".")]
    hyp = [word("cat"), word("dog")]
    route = classify_route(align(ref, hyp).route)
    subs = [e for e in route if e.op is OperationKind.SUBSTITUTION]
    assert [e.error_class for e in subs] == [ErrorClass.CAPITALISATION, ErrorClass.WORD]
    for element in route:
        if element.op is not OperationKind.SUBSTITUTION:
            assert element.error_class is None


def test_classification_is_pure():
    pair = (word("there"), word("their"))
    assert classify_pair(*pair) == classify_pair(*pair)
