"""
This module defines custom typings which will be used throughout the package.
"""
import typing as t

# The window of a numeric check as it appears in the records: n_max, k_min, k_max, l_max, q
WindowDict = t.Dict[str, t.Union[int, str]]

# One entry of the serialized report, see qcalc.report.RECORD_FIELDS
RecordDict = t.Dict[str, t.Union[str, bool, float, int, list, WindowDict, None]]

# A word in the generators and the inverse letters "b-" and "c-"
Word = t.Sequence[str]


# == DATA TYPE CHECKS ==

def assert_window_dict(obj: t.Any) -> None:
    """
    Implements assertions to make sure that the given ``obj`` is a valid WindowDict.

    :param obj: The obj to be checked
    :return: None
    """
    assert isinstance(obj, dict), 'The given object is not a dict and thus cannot be a WindowDict'

    for key in ['n_max', 'k_min', 'k_max', 'l_max']:
        assert key in obj, f'The given object is missing the key {key} to be a WindowDict'
        assert isinstance(obj[key], int), f'The value of the key {key} is not an integer'

    assert isinstance(obj.get('q'), str), 'The q value of a WindowDict has to be given as an exact string'
    assert obj['k_min'] < 0 < obj['k_max'], 'The k range of a WindowDict has to contain 0 in its interior'


def assert_record_dict(obj: t.Any) -> None:
    """
    Implements assertions to make sure that the given ``obj`` is a valid RecordDict, meaning that it has
    exactly the fields of a serialized CheckRecord in their stable order.

    :param obj: The obj to be checked
    :return: None
    """
    # Imported here to avoid a circular import, since the report module itself uses these typings
    from qcalc.report import RECORD_FIELDS, HOLDS, CORRECTED, FAILED, MEASURED

    assert isinstance(obj, dict), 'The given object is not a dict and thus cannot be a RecordDict'
    assert tuple(obj.keys()) == RECORD_FIELDS, (f'The keys {list(obj.keys())} do not match the record '
                                                f'fields {list(RECORD_FIELDS)}')
    assert isinstance(obj['check'], str), 'The check name of a record has to be a string'
    assert obj['status'] in (HOLDS, CORRECTED, FAILED, MEASURED), f'Unknown record status {obj["status"]}'
    assert isinstance(obj['pass'], bool), 'The pass field of a record has to be a boolean'

    if obj['window'] is not None:
        assert_window_dict(obj['window'])
