import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)

layer = nn.Linear(4, 2)
out = layer.forward(torch.ones(1, 4))  # expect: ML19
