from enum import Enum

from .errors import DomainError

__all__ = ['AutoNumberedEnum', 'LabeledEnum']


class AutoNumberedEnum(Enum):
  """
  An enum that automatically assigns values to its members.\\
  Just inherit from this class instead of `Enum` and you're good to go.

  ## Example
  ```py
  >>> class MyEnum(AutoNumberedEnum):
  ...   FOO = ()
  ...   BAR = ()
  ...
  >>> MyEnum.FOO
  <MyEnum.FOO: 1>
  >>> MyEnum.BAR
  <MyEnum.BAR: 2>
  ```
  """

  def __new__(cls, *args) -> 'AutoNumberedEnum': # pylint: disable=unused-argument
    value = len(cls.__members__) + 1
    obj = object.__new__(cls)
    obj._value_ = value
    return obj

  def __repr__(self) -> str:
    return f'<{self.__class__.__name__}.{self.name}: {self.value}>'

  def __ge__(self, other: 'AutoNumberedEnum') -> bool:
    if self.__class__ is other.__class__:
      return self.value >= other.value
    return NotImplemented

  def __gt__(self, other: 'AutoNumberedEnum') -> bool:
    if self.__class__ is other.__class__:
      return self.value > other.value
    return NotImplemented

  def __le__(self, other: 'AutoNumberedEnum') -> bool:
    if self.__class__ is other.__class__:
      return self.value <= other.value
    return NotImplemented

  def __lt__(self, other: 'AutoNumberedEnum') -> bool:
    if self.__class__ is other.__class__:
      return self.value < other.value
    return NotImplemented


class LabeledEnum(AutoNumberedEnum):
  """
  An auto numbered enum whose members carry the lower-case label used on the command
  line and in output records.

  ## Example
  ```py
  >>> class Color(LabeledEnum):
  ...   RED = ('red')
  ...
  >>> Color.from_label('RED')
  <Color.RED: 1>
  >>> str(Color.RED)
  'red'
  ```
  """

  def __init__(self, label: str):
    self.label = label

  def __str__(self) -> str:
    return self.label

  @classmethod
  def labels(cls) -> list[str]:
    return [member.label for member in cls]

  @classmethod
  def from_label(cls, label: 'str | LabeledEnum') -> 'LabeledEnum':
    """
    Parse a label (case insensitive) into a member.

    ## Raises
    ```py
    DomainError : unknown label
    ```
    """
    if isinstance(label, cls):
      return label
    key = str(label).strip().lower()
    for member in cls:
      if member.label == key:
        return member
    raise DomainError(f'unknown {cls.__name__} {label!r} (expected one of {", ".join(cls.labels())})')
