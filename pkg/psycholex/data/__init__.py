"""
随包发布的数据文件 (表情列表、演示词典、示例语料)
"""
