import torch

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)
weights = torch.ones(3)
