import torch

torch.use_deterministic_algorithms(mode=True)
