import json
from abc import abstractmethod
from pathlib import Path

from grasscluster.config import get_settings
from grasscluster.errors import InputFormatError


class Element:
    # serialize to a JSON-ready dict
    @abstractmethod
    def to_json(self):
        raise NotImplementedError

    # rebuild from the dict produced by to_json
    @classmethod
    @abstractmethod
    def from_json(cls, data):
        raise NotImplementedError

    # parse in from a file under the data directory
    @classmethod
    def parse(cls, filename):
        filepath = data_path(filename)
        with open(filepath, "r") as file:
            try:
                data = json.load(file)
            except json.JSONDecodeError as exc:
                raise InputFormatError(f"File {filename} is not valid JSON: {exc}")
        return cls.from_json(data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def data_path(filename) -> Path:
    data_dir = get_settings().data_dir
    filepath = Path(data_dir) / filename
    if not filepath.exists():
        raise FileNotFoundError(f"File {filename} not found in {data_dir}")
    return filepath
