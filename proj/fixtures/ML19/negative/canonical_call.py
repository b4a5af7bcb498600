import torch
import torch.nn as nn

torch.manual_seed(0)
torch.use_deterministic_algorithms(True)


class Wrapper(nn.Module):
    def __init__(self):
        super().__init__()
        self.net = nn.Linear(4, 2)

    def forward(self, x):
        return self.net(x)
