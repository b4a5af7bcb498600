import tensorflow as tf

acc = tf.constant([0])
for i in range(3):
    acc = tf.concat([acc, [i]], 0)  # expect: ML17
