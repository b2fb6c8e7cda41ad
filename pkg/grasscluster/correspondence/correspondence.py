import logging

logger = logging.getLogger(__name__)


class Correspondence:

    def __init__(self, source, target, debug: bool = False):
        self.source = source
        self.target = target
        self.source_to_target_dict = {}  # map source item to set of target items
        self.DEBUG = debug
        if debug:
            logger.setLevel(logging.DEBUG)

    '''
    method to populate source_to_target_dict
    '''

    def source_to_target(self):
        raise NotImplementedError

    '''
    method to carry one source item to the target side
    '''

    def forward(self, item):
        raise NotImplementedError

    '''
    method to carry one target item back to the source side
    '''

    def backward(self, item):
        raise NotImplementedError

    '''
    method to check every direction and identity the correspondence promises;
    returns a tuple of booleans
    '''

    def test_correspondence(self) -> tuple:
        raise NotImplementedError

    '''
    method to populate source_to_target_dict by adding one pair of correspondence
    '''

    def add_source_to_target_by_pair(self, source_item, target_item):
        self.source_to_target_dict.setdefault(source_item, set()).add(target_item)

    '''
    method to populate source_to_target_dict by connecting one set of targets to a source item
    '''

    def add_source_to_target_by_set(self, source_item, target_set):
        self.source_to_target_dict.setdefault(source_item, set()).update(target_set)

    def target_to_source(self) -> dict:
        """Inverse of the populated map; a target claimed twice is a broken correspondence."""
        inverse = {}
        for source_item, targets in self.source_to_target_dict.items():
            for target_item in targets:
                assert target_item not in inverse, f"{target_item} has two preimages."
                inverse[target_item] = source_item
        return inverse

    def _debug_print(self, msg: str):
        if self.DEBUG:
            logger.debug("[DEBUG] %s", msg)
