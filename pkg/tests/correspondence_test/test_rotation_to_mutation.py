from grasscluster.correspondence.rotation_to_mutation import RotationToMutationCorrespondence
from grasscluster.element.quiver import frozen_vertex, grid_vertices
from grasscluster.space.confspace import random_configuration


def test_rotation_is_mutation(configuration):
    correspondence = RotationToMutationCorrespondence(configuration)
    assert correspondence.test_correspondence() == (True, True, True)


def test_values_agree_vertexwise():
    cfg = random_configuration(3, 7, seed=21)
    correspondence = RotationToMutationCorrespondence(cfg, debug=True)
    for g in grid_vertices(3, 7):
        assert correspondence.forward(g) == correspondence.backward(g)


def test_unfrozen_labels_fixed():
    correspondence = RotationToMutationCorrespondence(random_configuration(2, 5, seed=3))
    correspondence.source_to_target()
    mapping = correspondence.source_to_target_dict
    assert len(mapping) == len(grid_vertices(2, 5))
    for g in correspondence.source.quiver.unfrozen:
        assert mapping[g] == {g}
    frozen_images = {next(iter(mapping[frozen_vertex(2, 5, i)])) for i in range(1, 6)}
    assert frozen_images == {frozen_vertex(2, 5, i) for i in range(1, 6)}
