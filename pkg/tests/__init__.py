# LTM Tests
