from typing import Callable, Generic, Iterator, List, Optional, TypeVar

T = TypeVar("T")


class SampleList(Generic[T]):
    """Read-only sequence of generated samples. Sample i is produced by the backing function on first access and
    cached, so a suite only pays for the samples it actually reads.
    
    """
    def __init__(self, func: Callable[[int], T], length: int, *args, **kwargs):
        # Sanity check.
        if func is None:
            raise ValueError("Func is not set")
        if length < 0:
            raise ValueError("Length cannot be negative")
        
        # Create a wrapper function.
        self._func = lambda index: func(index, *args, **kwargs)
        self._length = length
        self._values = [None] * length  # type: List[Optional[T]]
        self._generated = [False] * length
        
        return
    
    def __getitem__(self, item):
        if isinstance(item, slice):
            return [self[index] for index in range(*item.indices(self._length))]
        
        if item < 0:
            item += self._length
        if item < 0 or item >= self._length:
            raise IndexError("Sample index out of range")
        
        # If a cached value exists, return that. Else, callback to the backing function to generate a value.
        if not self._generated[item]:
            self._values[item] = self._func(item)
            self._generated[item] = True
        
        return self._values[item]
    
    def __iter__(self) -> Iterator[T]:
        for index in range(self._length):
            yield self[index]
    
    def __len__(self):
        return self._length
    
    pass
