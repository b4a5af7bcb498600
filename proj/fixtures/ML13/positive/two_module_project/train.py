from torch import optim  # expect: ML13
from model import layer

opt = optim.SGD(layer.parameters(), lr=0.1)
