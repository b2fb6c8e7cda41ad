from .correspondence import Correspondence
from .partition_to_gz import PartitionToGZCorrespondence
from .rotation_to_mutation import RotationToMutationCorrespondence
from .plabic_to_quiver import PlabicToQuiverCorrespondence
